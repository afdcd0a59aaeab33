"""The dual Radon transform (sphere average over hyperplane projections)
and the plane-wave decompositions it induces.

On a slice function f the transform is
    R*[f](x0, x) = (1/sigma_m) int_{S^(m-1)} f(x0, <x,w> w) dS_w ,
computed exactly on polynomials by substituting x_j -> w_j <x,w> and
integrating the resulting omega-polynomial with the exact monomial rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from .clifford import CliffordElement
from .constants import sphere_area
from .extensions import SliceFunction, gck_extension, slice_extension
from .laurent import LaurentPoly
from .poly import CliffordPolynomial
from .scalars import canon, to_complex
from .sphere import ExactMonomialRule, MonteCarloRule, ProductGaussRule


def dual_radon(f: CliffordPolynomial, rule: ExactMonomialRule | None = None) -> CliffordPolynomial:
    """Exact dual Radon transform of a polynomial; output is again polynomial.

    Each term c * x0^e0 * prod_j xj^ej becomes, after substitution,
    c * x0^e0 * w^e <x,w>^E with E = sum ej; expanding the bracket and
    integrating in w leaves rational coefficients once sigma_m is divided
    out.
    """
    m = f.m
    if rule is None:
        rule = ExactMonomialRule(m)
    sigma = sphere_area(m)
    out: dict[tuple, CliffordElement] = {}
    for exps, coeff in f.terms.items():
        e0, vec = exps[0], exps[1:]
        bigE = sum(vec)
        if bigE == 0:
            _accum(out, exps, coeff)
            continue
        for combo, mult in _multinomial(m, bigE):
            w_exp = tuple(v + b for v, b in zip(vec, combo))
            integral = rule.integrate_monomial(w_exp)
            if integral.is_zero():
                continue
            weight = canon(integral / sigma * mult)
            key = (e0, *combo)
            _accum(out, key, coeff.scale(weight))
    return CliffordPolynomial(m, out)


def _accum(store: dict, key, coeff: CliffordElement) -> None:
    store[key] = store[key] + coeff if key in store else coeff


def _multinomial(m: int, total: int):
    """(exponent combo, multinomial coefficient) pairs with sum = total."""
    def rec(slots: int, rem: int):
        if slots == 1:
            yield (rem,)
            return
        for head in range(rem + 1):
            for tail in rec(slots - 1, rem - head):
                yield (head, *tail)

    fact = math.factorial(total)
    for combo in rec(m, total):
        denom = 1
        for c in combo:
            denom *= math.factorial(c)
        yield combo, Fraction(fact, denom)


def dual_radon_pointwise(sf: SliceFunction, rule: ProductGaussRule, x0, xv) -> CliffordElement:
    """Numeric dual Radon transform of an evaluable slice function at a point."""
    m = sf.m
    acc = CliffordElement.zero(m)
    for w, omega in zip(rule.weights, rule.nodes):
        t = float(np.dot(omega, xv))
        val = sf.evaluate(x0, tuple(t * o for o in omega))
        acc = acc + val.scale(float(w))
    return acc.scale(1.0 / rule.sigma())


@dataclass(frozen=True)
class ResidualReport:
    check: str
    m: int
    degree: int
    rule: str
    residual: float
    exact: bool
    stderr: float | None = None

    def to_json(self) -> dict:
        d = {
            "check": self.check,
            "m": self.m,
            "degree": self.degree,
            "rule": self.rule,
            "residual": self.residual,
            "exact": self.exact,
        }
        if self.stderr is not None:
            d["stderr"] = self.stderr
        return d


def plane_wave_gck_check(f0: LaurentPoly, m: int, rule,
                         point: tuple | None = None) -> ResidualReport:
    """Compare (1/sigma_m) int S[f0](x0 + <x,w>w) dS against the axial
    extension of f0: exact polynomial equality under the monomial rule,
    pointwise residual under numeric rules."""
    if not f0.is_polynomial():
        raise ValueError("plane-wave check needs polynomial data")
    deg = f0.max_exp()
    sf = slice_extension(f0, m)
    gck_poly = gck_extension(f0, m).to_polynomial()
    if isinstance(rule, ExactMonomialRule):
        lhs = dual_radon(sf.to_polynomial(), rule)
        ok = lhs == gck_poly
        gap = 0.0 if ok else (lhs.map_coeffs(lambda c: c.to_numeric())
                              - gck_poly.map_coeffs(lambda c: c.to_numeric())).norm_inf()
        return ResidualReport("gck_plane_wave", m, deg, "exact", gap, ok)
    points = [point] if point is not None else _check_points(m)
    if isinstance(rule, ProductGaussRule):
        worst = 0.0
        for x0, xv in points:
            lhs = dual_radon_pointwise(sf, rule, x0, xv)
            rhs = gck_poly.evaluate(x0, xv).to_numeric()
            worst = max(worst, (lhs - rhs).norm_inf())
        return ResidualReport("gck_plane_wave", m, deg, f"gauss:{rule.level}", worst, False)
    if isinstance(rule, MonteCarloRule):
        x0, xv = points[0]
        t = rule.nodes @ np.asarray(xv, dtype=float)
        # slice values along each plane direction, vectorized per Laurent term
        z = x0 + 1j * t
        vals = np.zeros_like(z)
        for n, c in f0.terms.items():
            vals = vals + complex(c) * z**n
        scalar_est, scalar_se = rule.estimate(vals.real)
        vec_est, vec_se = rule.estimate(rule.nodes * vals.imag[:, None])
        rhs = gck_poly.evaluate(x0, xv).to_numeric()
        sig = rule.sigma()
        resid = abs(scalar_est / sig - to_complex(rhs.scalar_part()).real)
        comps = rhs.vector_components()
        for j in range(m):
            resid = max(resid, abs(vec_est[j] / sig - to_complex(comps[j]).real))
        se = float(max(scalar_se, *vec_se)) / sig
        return ResidualReport("gck_plane_wave", m, deg, f"mc:{rule.n}:{rule.seed}",
                              float(resid), False, se)
    raise TypeError("unsupported rule")


def _check_points(m: int) -> list[tuple[float, tuple]]:
    base = [0.3, -0.25, 0.2, 0.15, -0.1, 0.05][:m]
    return [
        (1.0, tuple(base)),
        (0.7, tuple(0.5 * b for b in base)),
        (-0.9, tuple(base)),
    ]


def in_plane_power(x0: float, t: float, n: int) -> complex:
    """(x0 + t w)^n inside the commutative plane spanned by 1 and w."""
    z = complex(x0, t)
    if n < 0 and z == 0:
        raise ZeroDivisionError("paravector power singular at 0")
    return z**n


def _plane_wave_vs_closed(m: int, exponent: int, const: float, closed, point: tuple,
                          rule: ProductGaussRule) -> float:
    x0, xv = point[0], tuple(point[1:])
    if x0 == 0:
        raise ValueError("plane-wave form needs x0 != 0 on the chosen points")
    acc_s = 0.0
    acc_v = np.zeros(m)
    for w, omega in zip(rule.weights, rule.nodes):
        t = float(np.dot(omega, xv))
        z = in_plane_power(x0, t, exponent)
        acc_s += float(w) * z.real
        acc_v += float(w) * z.imag * omega
    quad = CliffordElement(m, {0: const * acc_s,
                               **{1 << j: const * acc_v[j] for j in range(m)}})
    closed_val = closed.evaluate(x0, list(xv)).to_numeric()
    return (quad - closed_val).norm_inf()


def cauchy_plane_wave_check(m: int, point: tuple, rule: ProductGaussRule) -> float:
    """Residual of the plane-wave form of the Cauchy kernel at one point:

        E(x) = sgn(x0)^(m+1) / (sigma_m sigma_(m+1))
               * int (x0 + <x,w> w)^(-m) dS_w ,

    against the closed form, off the singular set."""
    from .kernels import cauchy_kernel

    x0 = point[0]
    sgn = 1.0 if x0 > 0 else (-1.0) ** (m + 1)
    const = sgn / (float(sphere_area(m)) * float(sphere_area(m + 1)))
    return _plane_wave_vs_closed(m, -m, const, cauchy_kernel(m), point, rule)


def monomial_plane_wave_check(m: int, k: int, point: tuple, rule: ProductGaussRule) -> float:
    """Plane-wave representation of the negative-order monomial P^(-k):
    constant * sgn(x0)^(m+1)/sigma_m * int (x0 + <x,w>w)^(1-k-m) dS."""
    from .kernels import monogenic_monomial, monomial_constant

    x0 = point[0]
    sgn = 1.0 if x0 > 0 else (-1.0) ** (m + 1)
    const = float(monomial_constant(m, k)) * sgn / float(sphere_area(m))
    closed = monogenic_monomial(m, -k).closed
    return _plane_wave_vs_closed(m, 1 - k - m, const, closed, point, rule)
