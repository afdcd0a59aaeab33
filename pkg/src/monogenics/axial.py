"""Closed-form calculus for axial functions A(x0,r) + w B(x0,r).

Both components are held as exact sums of terms  c * x0^p * r^q * rho^(e/2)
with rho = x0^2 + r^2.  This family is closed under d_x0, d_r, division by
r, the inversion substitution (x0, r) -> (x0, r)/rho, and products, which
is everything the kernel manipulations need.  No numeric differentiation
ever happens here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .clifford import CliffordElement
from .poly import CliffordPolynomial
from .scalars import canon, is_zero_scalar


class DomainError(ValueError):
    """Evaluation requested on the singular set of a closed form."""


class RhoExpr:
    """Exact linear combination of x0^p * r^q * (x0^2+r^2)^(e/2) terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int, int], object] | None = None):
        # canonical form: r-powers reduced to q in {0, 1} via r^2 = rho - x0^2,
        # so cancellations forced by that relation happen automatically
        self.terms: dict[tuple[int, int, int], object] = {}
        if terms:
            stack = list(terms.items())
            while stack:
                (p, q, e), c = stack.pop()
                c = canon(c)
                if is_zero_scalar(c):
                    continue
                if q >= 2:
                    stack.append(((p, q - 2, e + 2), c))
                    stack.append(((p + 2, q - 2, e), -c))
                    continue
                key = (p, q, e)
                if key in self.terms:
                    tot = canon(self.terms[key] + c)
                    if is_zero_scalar(tot):
                        del self.terms[key]
                    else:
                        self.terms[key] = tot
                else:
                    self.terms[key] = c

    @classmethod
    def zero(cls) -> "RhoExpr":
        return cls()

    @classmethod
    def term(cls, coeff, p: int = 0, q: int = 0, e: int = 0) -> "RhoExpr":
        return cls({(p, q, e): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, RhoExpr):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "RhoExpr") -> "RhoExpr":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms[key] + c if key in terms else c
        return RhoExpr(terms)

    def __sub__(self, other: "RhoExpr") -> "RhoExpr":
        return self + (-other)

    def __neg__(self) -> "RhoExpr":
        return RhoExpr({k: -c for k, c in self.terms.items()})

    def __mul__(self, other) -> "RhoExpr":
        if isinstance(other, RhoExpr):
            terms: dict[tuple[int, int, int], object] = {}
            for (p1, q1, e1), a in self.terms.items():
                for (p2, q2, e2), b in other.terms.items():
                    key = (p1 + p2, q1 + q2, e1 + e2)
                    c = a * b
                    terms[key] = terms[key] + c if key in terms else c
            return RhoExpr(terms)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, s) -> "RhoExpr":
        return RhoExpr({k: c * s for k, c in self.terms.items()})

    def diff_x0(self) -> "RhoExpr":
        # d/dx0 rho^(e/2) = e * x0 * rho^((e-2)/2)
        terms: dict[tuple[int, int, int], object] = {}

        def add(key, c):
            terms[key] = terms[key] + c if key in terms else c

        for (p, q, e), c in self.terms.items():
            if p:
                add((p - 1, q, e), c * p)
            if e:
                add((p + 1, q, e - 2), c * e)
        return RhoExpr(terms)

    def diff_r(self) -> "RhoExpr":
        terms: dict[tuple[int, int, int], object] = {}

        def add(key, c):
            terms[key] = terms[key] + c if key in terms else c

        for (p, q, e), c in self.terms.items():
            if q:
                add((p, q - 1, e), c * q)
            if e:
                add((p, q + 1, e - 2), c * e)
        return RhoExpr(terms)

    def div_r(self) -> "RhoExpr":
        return RhoExpr({(p, q - 1, e): c for (p, q, e), c in self.terms.items()})

    def mul_x0(self) -> "RhoExpr":
        return RhoExpr({(p + 1, q, e): c for (p, q, e), c in self.terms.items()})

    def mul_r(self) -> "RhoExpr":
        return RhoExpr({(p, q + 1, e): c for (p, q, e), c in self.terms.items()})

    def mul_rho_half_power(self, e: int) -> "RhoExpr":
        return RhoExpr({(p, q, e0 + e): c for (p, q, e0), c in self.terms.items()})

    def invert_point(self) -> "RhoExpr":
        """Substitute (x0, r) -> (x0/rho, r/rho); note rho -> 1/rho."""
        return RhoExpr({(p, q, -2 * (p + q) - e): c for (p, q, e), c in self.terms.items()})

    def evaluate(self, x0, r):
        """Value at (x0, r); exact when inputs are rational and e is even."""
        rho = x0 * x0 + r * r
        out = None
        for (p, q, e), c in self.terms.items():
            if (p < 0 and x0 == 0) or (q < 0 and r == 0) or (e < 0 and rho == 0):
                raise DomainError("evaluation on the singular set")
            v = _ipow(x0, p) * _ipow(r, q)
            if e:
                if e % 2 == 0:
                    v = v * _ipow(rho, e // 2)
                else:
                    v = v * math.sqrt(float(rho)) ** e if rho != 0 else 0
            term = _scalar_times(c, canon(v))
            out = term if out is None else out + term
        return out if out is not None else Fraction(0)

    def is_polynomial(self) -> bool:
        return all(p >= 0 and q >= 0 and e >= 0 and e % 2 == 0 for (p, q, e) in self.terms)

    def r_parity(self) -> int | None:
        """0 if even in r, 1 if odd, None if mixed (rho is even in r)."""
        ps = {q % 2 for (_, q, _) in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*x0^{p}*r^{q}*rho^({Fraction(e,2)})" for (p, q, e), c in sorted(self.terms.items())
        )


def _ipow(base, n: int):
    if n == 0:
        return 1
    return base**n if n > 0 else 1 / (base ** (-n))


def _scalar_times(c, v):
    # exact coefficients meet numeric points only through explicit conversion
    from .scalars import PiScalar

    if isinstance(c, PiScalar) and isinstance(v, (float, complex)):
        z = c.to_complex()
        return (z.real if z.imag == 0.0 else z) * v
    return c * v


@dataclass
class AxialClosedForm:
    """Evaluable axial function sgn(x0)^s * (A(x0,r) + w B(x0,r)).

    A must be even and B odd in r on the domain; the optional sign power
    keeps half-axis factors explicit instead of folding them into floats.
    Evaluation at a singular point raises DomainError, never returns NaN.
    """

    m: int
    A: RhoExpr
    B: RhoExpr
    sign_power: int = 0
    singular_origin: bool = True

    def scale(self, s) -> "AxialClosedForm":
        return AxialClosedForm(self.m, self.A.scale(s), self.B.scale(s),
                               self.sign_power, self.singular_origin)

    def __add__(self, other: "AxialClosedForm") -> "AxialClosedForm":
        if self.m != other.m or self.sign_power % 2 != other.sign_power % 2:
            raise ValueError("incompatible closed forms")
        return AxialClosedForm(self.m, self.A + other.A, self.B + other.B,
                               self.sign_power,
                               self.singular_origin or other.singular_origin)

    def diff_x0(self) -> "AxialClosedForm":
        if self.sign_power % 2:
            raise ValueError("cannot differentiate across the sign factor")
        return AxialClosedForm(self.m, self.A.diff_x0(), self.B.diff_x0(),
                               self.sign_power, self.singular_origin)

    def laplacian(self) -> "AxialClosedForm":
        """Laplacian in m+1 variables of A + w B, kept in closed form.

        On the scalar part: d_x0^2 + d_r^2 + (m-1)/r d_r; on the w part the
        same radial operator plus the -(m-1)/r^2 angular term.
        """
        if self.sign_power % 2:
            raise ValueError("cannot differentiate across the sign factor")
        m = self.m
        A, B = self.A, self.B
        lap_a = A.diff_x0().diff_x0() + A.diff_r().diff_r() + A.diff_r().div_r().scale(m - 1)
        # B_r/r - B/r^2 = d_r(B/r), which keeps the terms in canonical form
        lap_b = (
            B.diff_x0().diff_x0()
            + B.diff_r().diff_r()
            + B.div_r().diff_r().scale(m - 1)
        )
        return AxialClosedForm(m, lap_a, lap_b, self.sign_power, self.singular_origin)

    def kelvin(self) -> "AxialClosedForm":
        """Inversion f -> (conj(x)/|x|^(m+1)) f(conj(x)/|x|^2), stays closed."""
        m = self.m
        At = self.A.invert_point()
        Bt = self.B.invert_point()
        shell = -(m + 1)
        newA = (At.mul_x0() - Bt.mul_r()).mul_rho_half_power(shell)
        newB = (At.mul_r() + Bt.mul_x0()).mul_rho_half_power(shell).scale(-1)
        # sgn(x0) of the inverted argument equals sgn(x0), so parity is kept
        return AxialClosedForm(m, newA, newB, self.sign_power, True)

    def value_parts(self, x0, r):
        a = self.A.evaluate(x0, r)
        b = self.B.evaluate(x0, r)
        if self.sign_power % 2:
            if x0 == 0:
                raise DomainError("sign factor undefined at x0 = 0")
            if (x0 if not isinstance(x0, complex) else x0.real) < 0:
                a, b = -a, -b
        return a, b

    def evaluate(self, x0, xv: Sequence) -> CliffordElement:
        m = self.m
        r2 = sum(c * c for c in xv)
        if self.singular_origin and x0 == 0 and r2 == 0:
            raise DomainError("closed form singular at the origin")
        if r2 == 0:
            a, _ = self.value_parts(x0, 0 if isinstance(x0, (int, Fraction)) else 0.0)
            return CliffordElement.scalar(m, a) if not isinstance(a, CliffordElement) else a
        from .extensions import _sqrt_exact_or_float

        r = _sqrt_exact_or_float(canon(r2))
        a, b = self.value_parts(x0, r)
        omega = CliffordElement.vector(m, [c / r for c in xv])
        out = CliffordElement.scalar(m, a)
        return out + omega.scale(b)

    def to_polynomial(self) -> CliffordPolynomial:
        """Expand into a genuine polynomial; fails if any power is negative."""
        m = self.m
        if self.sign_power % 2:
            raise ValueError("sign factor prevents polynomial form")
        a_poly = self.A.is_polynomial() and all(q % 2 == 0 for (_, q, _) in self.A.terms)
        b_shift = RhoExpr({(p, q - 1, e): c for (p, q, e), c in self.B.terms.items()})
        b_poly = b_shift.is_polynomial() and all(q % 2 == 0 for (_, q, _) in b_shift.terms)
        if not (a_poly and b_poly):
            raise ValueError("closed form is not polynomial")
        x0 = CliffordPolynomial.variable(m, 0)
        r2 = CliffordPolynomial.radial_sq(m)
        rho = x0 * x0 + r2
        vec = CliffordPolynomial.vector_variable(m)
        out = CliffordPolynomial.zero(m)
        for (p, q, e), c in self.A.terms.items():
            out = out + ((x0**p) * (r2 ** (q // 2)) * (rho ** (e // 2))).scale(c)
        for (p, q, e), c in self.B.terms.items():
            out = out + (vec * (x0**p) * (r2 ** ((q - 1) // 2)) * (rho ** (e // 2))).scale(c)
        return out

    def numeric_residual_vs(self, other: "AxialClosedForm", points) -> float:
        worst = 0.0
        for x0, xv in points:
            d = self.evaluate(x0, xv).to_numeric() - other.evaluate(x0, xv).to_numeric()
            worst = max(worst, d.norm_inf())
        return worst


def paravector_power_closed(m: int, n: int) -> AxialClosedForm:
    """Closed axial form of the paravector power x^n for any integer n.

    In the slice plane x = x0 + i r, so the components are the real and
    imaginary parts of (x0 + i r)^n; for n < 0 that is
    (x0 - i r)^|n| * rho^(-|n|).
    """
    k = abs(n)
    A = RhoExpr.zero()
    B = RhoExpr.zero()
    sign = 1 if n >= 0 else -1  # conjugation flips the imaginary part
    for t in range(k + 1):
        c = Fraction(math.comb(k, t))
        if t % 2 == 0:
            c = c if (t // 2) % 2 == 0 else -c
            A = A + RhoExpr.term(c, p=k - t, q=t)
        else:
            c = c if (t // 2) % 2 == 0 else -c
            B = B + RhoExpr.term(sign * c, p=k - t, q=t)
    if n < 0:
        A = A.mul_rho_half_power(-2 * k)
        B = B.mul_rho_half_power(-2 * k)
    return AxialClosedForm(m, A, B, 0, singular_origin=n < 0)
