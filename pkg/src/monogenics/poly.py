"""Clifford-coefficient polynomials in (x0, x1, ..., xm) and the first-order operators on them.

Variables are central scalars; only the coefficients multiply through the
algebra.  Operators act from the left, matching the right-module convention
of the function spaces: ``D p = d/dx0 p + sum_j e_j (d/dxj p)``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

from .clifford import CliffordElement
from .scalars import canon

Exponents = tuple[int, ...]


class OperatorTag(enum.Enum):
    D = "cauchy_riemann"              # d_x0 + d_x
    DBAR = "conjugate_cauchy_riemann"  # d_x0 - d_x
    DIRAC = "dirac"                   # d_x
    LAPLACIAN = "laplacian"           # sum_j d_xj^2, j = 0..m
    PARTIAL_X0 = "partial_x0"
    HYPERCOMPLEX = "hypercomplex_derivative"  # (d_x0 - d_x)/2


class CliffordPolynomial:
    """Sparse multivariate polynomial with CliffordElement coefficients."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict[Exponents, CliffordElement] | None = None):
        self.m = m
        self.terms: dict[Exponents, CliffordElement] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != m + 1:
                    raise ValueError("exponent tuple must have length m+1")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent in polynomial")
                if coeff.m != m:
                    raise ValueError("coefficient dimension mismatch")
                if not coeff.is_zero():
                    self.terms[tuple(exps)] = coeff

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "CliffordPolynomial":
        return cls(m)

    @classmethod
    def constant(cls, m: int, coeff: CliffordElement) -> "CliffordPolynomial":
        return cls(m, {(0,) * (m + 1): coeff})

    @classmethod
    def scalar_constant(cls, m: int, value) -> "CliffordPolynomial":
        return cls.constant(m, CliffordElement.scalar(m, value))

    @classmethod
    def one(cls, m: int) -> "CliffordPolynomial":
        return cls.scalar_constant(m, Fraction(1))

    @classmethod
    def variable(cls, m: int, j: int) -> "CliffordPolynomial":
        """The coordinate x_j (j = 0 is the real axis)."""
        if not 0 <= j <= m:
            raise ValueError("variable index out of range")
        exps = tuple(1 if i == j else 0 for i in range(m + 1))
        return cls(m, {exps: CliffordElement.one(m)})

    @classmethod
    def vector_variable(cls, m: int) -> "CliffordPolynomial":
        """The grade-1 variable x1 e_1 + ... + xm e_m."""
        terms = {}
        for j in range(1, m + 1):
            exps = tuple(1 if i == j else 0 for i in range(m + 1))
            terms[exps] = CliffordElement.generator(m, j)
        return cls(m, terms)

    @classmethod
    def paravector_variable(cls, m: int) -> "CliffordPolynomial":
        return cls.variable(m, 0) + cls.vector_variable(m)

    @classmethod
    def radial_sq(cls, m: int) -> "CliffordPolynomial":
        """|x|^2 of the vector part: x1^2 + ... + xm^2."""
        out = cls.zero(m)
        for j in range(1, m + 1):
            out = out + cls.variable(m, j) * cls.variable(m, j)
        return out

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "CliffordPolynomial":
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        if self.m != other.m:
            raise ValueError("dimension mismatch")
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms[exps] + coeff if exps in terms else coeff
        return CliffordPolynomial(self.m, terms)

    def __sub__(self, other) -> "CliffordPolynomial":
        return self + (-other)

    def __neg__(self) -> "CliffordPolynomial":
        return CliffordPolynomial(self.m, {e: -c for e, c in self.terms.items()})

    def scale(self, s) -> "CliffordPolynomial":
        return CliffordPolynomial(self.m, {e: c.scale(s) for e, c in self.terms.items()})

    def left_mul_element(self, a: CliffordElement) -> "CliffordPolynomial":
        return CliffordPolynomial(self.m, {e: a * c for e, c in self.terms.items()})

    def right_mul_element(self, a: CliffordElement) -> "CliffordPolynomial":
        return CliffordPolynomial(self.m, {e: c * a for e, c in self.terms.items()})

    def __mul__(self, other) -> "CliffordPolynomial":
        if isinstance(other, CliffordPolynomial):
            if self.m != other.m:
                raise ValueError("dimension mismatch")
            terms: dict[Exponents, CliffordElement] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    exps = tuple(x + y for x, y in zip(ea, eb))
                    c = ca * cb
                    terms[exps] = terms[exps] + c if exps in terms else c
            return CliffordPolynomial(self.m, terms)
        return self.scale(other)

    def __rmul__(self, other) -> "CliffordPolynomial":
        return self.scale(other)

    def __pow__(self, n: int) -> "CliffordPolynomial":
        if n < 0:
            raise ValueError("negative power")
        out = CliffordPolynomial.one(self.m)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    # -- calculus -------------------------------------------------------

    def diff(self, j: int) -> "CliffordPolynomial":
        terms: dict[Exponents, CliffordElement] = {}
        for exps, coeff in self.terms.items():
            if exps[j] == 0:
                continue
            new = list(exps)
            new[j] -= 1
            key = tuple(new)
            c = coeff.scale(exps[j])
            terms[key] = terms[key] + c if key in terms else c
        return CliffordPolynomial(self.m, terms)

    def evaluate(self, x0, xv: Sequence) -> CliffordElement:
        if len(xv) != self.m:
            raise ValueError("need m vector components")
        point = (x0, *xv)
        out = CliffordElement.zero(self.m)
        for exps, coeff in self.terms.items():
            mono = 1
            for val, e in zip(point, exps):
                if e:
                    mono = mono * val**e
            out = out + coeff.scale(canon(mono))
        return out

    def map_coeffs(self, fn) -> "CliffordPolynomial":
        return CliffordPolynomial(self.m, {e: fn(c) for e, c in self.terms.items()})

    def norm_inf(self) -> float:
        return max((c.norm_inf() for c in self.terms.values()), default=0.0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = ["x0"] + [f"x{j}" for j in range(1, self.m + 1)]
        parts = []
        for exps in sorted(self.terms):
            mono = "*".join(
                f"{n}^{e}" if e > 1 else n for n, e in zip(names, exps) if e
            )
            c = self.terms[exps]
            parts.append(f"[{c}]" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def apply_operator(tag: OperatorTag, p: CliffordPolynomial) -> CliffordPolynomial:
    """Exact left action of the stated differential operator."""
    m = p.m
    if tag is OperatorTag.PARTIAL_X0:
        return p.diff(0)
    if tag is OperatorTag.LAPLACIAN:
        out = CliffordPolynomial.zero(m)
        for j in range(m + 1):
            out = out + p.diff(j).diff(j)
        return out
    dirac = CliffordPolynomial.zero(m)
    for j in range(1, m + 1):
        dirac = dirac + p.diff(j).left_mul_element(CliffordElement.generator(m, j))
    if tag is OperatorTag.DIRAC:
        return dirac
    if tag is OperatorTag.D:
        return p.diff(0) + dirac
    if tag is OperatorTag.DBAR:
        return p.diff(0) - dirac
    if tag is OperatorTag.HYPERCOMPLEX:
        return (p.diff(0) - dirac).scale(Fraction(1, 2))
    raise ValueError(f"unknown operator {tag}")


def paravector_power(m: int, k: int) -> CliffordPolynomial:
    """(x0 + x)^k expanded into a genuine polynomial via x^2 = -|x|^2."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return CliffordPolynomial.paravector_variable(m) ** k


def is_monogenic(p: CliffordPolynomial) -> bool:
    """True iff the left Cauchy-Riemann operator annihilates p exactly."""
    return apply_operator(OperatorTag.D, p).is_zero()
