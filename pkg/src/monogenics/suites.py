"""Verification suites: each runs a battery of identity checks at desk scale
and returns a report whose canonical JSON is byte-stable across runs.

A suite passes iff every exact case has residual zero and every numeric case
sits inside its declared tolerance.  Numeric tolerances are either fixed by
the identity being checked or derived from a certified truncation bound,
never tuned after the fact.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .clifford import CliffordElement, Paravector
from .constants import constants, gamma_odd_closed_form, sphere_area
from .cst import (
    axial_cst,
    axial_cst_radon_route,
    classical_cst,
    fueter_cst_routes,
    heat_semigroup,
    slice_cst,
    slice_cst_fourier,
    unitarity_check,
)
from .extensions import (
    appell_Q,
    appell_sum,
    gck_bessel_form,
    gck_extension,
    intrinsic_split,
    slice_extension,
)
from .fueter import (fueter_kernel_range, fueter_on_laurent, fueter_on_power,
                     laplacian_power_route, radial_route_components)
from .gausspoly import hermite_function
from .kernels import cauchy_kernel, kelvin_inversion, monogenic_monomial, verify_monomial_identities
from .laurent import LaurentPoly
from .poly import CliffordPolynomial, OperatorTag, apply_operator, is_monogenic, paravector_power
from .radon import cauchy_plane_wave_check, dual_radon, monomial_plane_wave_check, plane_wave_gck_check
from .scalars import PiScalar
from .sphere import ExactMonomialRule, MonteCarloRule, ProductGaussRule, funk_hecke_constants

OP_REGISTRY: dict[str, list[str]] = {
    "clifford_core": ["geometric_product", "clifford_conjugate", "hermitian_conjugate", "constants"],
    "poly_engine": ["apply_operator", "paravector_power", "is_monogenic"],
    "extension_maps": ["slice_extension", "intrinsic_split", "gck_extension",
                       "gck_bessel_form", "appell_Q"],
    "kernels_monomials": ["cauchy_kernel", "kelvin_inversion", "monogenic_monomial",
                          "verify_monomial_identities"],
    "fueter_map": ["fueter_on_power", "laplacian_power_route", "radial_route_components", "fueter_on_laurent"],
    "radon_sphere": ["sphere_integrate", "funk_hecke_constants", "dual_radon",
                     "plane_wave_gck_check", "cauchy_plane_wave_check"],
    "cst": ["heat_semigroup", "classical_cst", "slice_cst", "axial_cst", "fueter_cst",
            "unitarity_check"],
    "cli": ["run_suite", "export_object"],
}

SUITE_NAMES = ("algebra", "gck", "fueter", "monomials", "radon", "cst", "all")


@dataclass
class CaseResult:
    case_id: str
    identity: str
    params: dict
    exact: bool
    residual: float
    tol: float
    passed: bool
    ops: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        return {
            "id": self.case_id,
            "identity": self.identity,
            "params": self.params,
            "exact": self.exact,
            "residual": self.residual,
            "tol": self.tol,
            "pass": self.passed,
            "ops": sorted(self.ops),
        }


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: list[CaseResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def covered_ops(self) -> set[str]:
        return {op for c in self.cases for op in c.ops}

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "cases": [c.to_json() for c in self.cases],
            "pass": self.passed,
        }
        if timing:
            out["timing_ms"] = {c.case_id: round(c.elapsed_ms, 1) for c in self.cases}
        return out

    def table(self) -> str:
        rows = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.cases:
            kind = "exact" if c.exact else f"tol={c.tol:.1e}"
            rows.append(
                f"  [{'ok' if c.passed else 'XX'}] {c.case_id:36s} residual={c.residual:.3e} ({kind})"
            )
        return "\n".join(rows)


class _Suite:
    def __init__(self, name: str, params: dict):
        self.report = VerificationReport(name, params, [])
        self._mark = time.perf_counter()

    def case(self, case_id: str, identity: str, ops: list[str], *, exact: bool,
             residual: float, tol: float = 0.0, params: dict | None = None) -> None:
        now = time.perf_counter()
        elapsed = (now - self._mark) * 1e3  # work done since the previous case
        self._mark = now
        residual = float(residual)
        passed = bool(residual == 0.0 if exact else residual <= tol)
        self.report.cases.append(
            CaseResult(case_id, identity, params or {}, exact, residual,
                       float(tol), passed, ops, elapsed)
        )


def _rand_element(rng: random.Random, m: int, nterms: int = 4) -> CliffordElement:
    coeffs = {}
    for _ in range(nterms):
        mask = rng.randrange(1 << m)
        coeffs[mask] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return CliffordElement(m, coeffs)


def _rand_complex_element(rng: random.Random, m: int, nterms: int = 4) -> CliffordElement:
    coeffs = {}
    for _ in range(nterms):
        mask = rng.randrange(1 << m)
        coeffs[mask] = PiScalar.of(Fraction(rng.randint(-9, 9), rng.randint(1, 9))) + \
            PiScalar.imaginary(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    return CliffordElement(m, coeffs)


def _rand_poly(rng: random.Random, m: int, degree: int, nterms: int = 5) -> CliffordPolynomial:
    terms = {}
    for _ in range(nterms):
        exps = [0] * (m + 1)
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(m + 1)] += 1
        terms[tuple(exps)] = _rand_element(rng, m, 2)
    return CliffordPolynomial(m, terms)


# ---------------------------------------------------------------------------
# individual suites
# ---------------------------------------------------------------------------


def suite_algebra(m_max: int = 5, count: int = 2000, seed: int = 42) -> VerificationReport:
    s = _Suite("algebra", {"m_max": m_max, "count": count, "seed": seed})
    rng = random.Random(seed)

    bad = 0
    for _ in range(count):
        m = rng.randint(1, m_max)
        a, b, c = (_rand_element(rng, m) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad += 1
        if a * (b + c) != a * b + a * c:
            bad += 1
        if (a * b).conjugate() != b.conjugate() * a.conjugate():
            bad += 1
    s.case("assoc_distrib_conj_random", "(ab)c = a(bc); a(b+c) = ab+ac; conj(ab) = conj(b)conj(a)",
           ["geometric_product", "clifford_conjugate"], exact=True, residual=float(bad),
           params={"count": count})

    bad = 0
    for _ in range(max(200, count // 10)):
        m = rng.randint(1, m_max)
        x = Paravector(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                       tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(m)))
        lhs = x.to_element() * x.to_element().conjugate()
        if lhs != CliffordElement.scalar(m, x.norm_sq()):
            bad += 1
        u = CliffordElement.vector(m, [Fraction(rng.randint(-5, 5)) for _ in range(m)])
        v = CliffordElement.vector(m, [Fraction(rng.randint(-5, 5)) for _ in range(m)])
        inner = sum(a * b for a, b in zip(u.vector_components(), v.vector_components()))
        if u * v + v * u != CliffordElement.scalar(m, -2 * inner):
            bad += 1
    s.case("paravector_norm_anticommutator", "x conj(x) = |x|^2; uv+vu = -2<u,v>",
           ["geometric_product", "clifford_conjugate"], exact=True, residual=float(bad))

    bad = 0
    for _ in range(max(200, count // 10)):
        m = rng.randint(1, m_max)
        a = _rand_complex_element(rng, m)
        b = _rand_complex_element(rng, m)
        if a.hermitian().hermitian() != a:
            bad += 1
        if (a * b).hermitian() != b.hermitian() * a.hermitian():
            bad += 1
    s.case("hermitian_involution", "(a^)^ = a; (ab)^ = b^ a^",
           ["hermitian_conjugate"], exact=True, residual=float(bad))

    worst = 0.0
    for _ in range(max(200, count // 10)):
        m = rng.randint(1, m_max)
        a = _rand_element(rng, m)
        b = _rand_element(rng, m)
        exact_prod = (a * b).to_numeric()
        float_prod = a.to_numeric() * b.to_numeric()
        scale = max(exact_prod.norm_inf(), 1.0)
        worst = max(worst, (exact_prod - float_prod).norm_inf() / scale)
    s.case("float_backend_agreement", "exact and float products agree to relative 1e-12",
           ["geometric_product"], exact=False, residual=worst, tol=1e-12)

    gamma_ok = 0
    for m in (1, 3, 5):
        if constants(m).gamma != PiScalar.of(gamma_odd_closed_form(m)):
            gamma_ok += 1
    c3 = constants(3)
    if not (c3.gamma == PiScalar.of(-2) and c3.lam == PiScalar.of(4)
            and c3.sigma_next == PiScalar.pi_power(4, 2)):
        gamma_ok += 1
    s.case("constants_closed_forms", "gamma odd closed form; gamma_3=-2, lam_3=4, sigma_4=2pi^2",
           ["constants"], exact=True, residual=float(gamma_ok))
    return s.report


def suite_gck(m_max: int = 5, degree: int = 8) -> VerificationReport:
    s = _Suite("gck", {"m_max": m_max, "degree": degree})
    rng = random.Random(7)

    bad = 0
    for m in range(2, m_max + 1):
        for k in range(degree + 1):
            g = gck_extension(LaurentPoly.monomial(k), m)
            p = g.to_polynomial()
            if not is_monogenic(p):
                bad += 1
            if g.restrict() != LaurentPoly.monomial(k):
                bad += 1
            if gck_bessel_form(LaurentPoly.monomial(k), m) != g:
                bad += 1
    s.case("gck_monogenic_restrict_bessel",
           "D GCK[x0^k] = 0; GCK restricts to x0^k; Bessel series matches recursion",
           ["gck_extension", "gck_bessel_form", "apply_operator", "is_monogenic"],
           exact=True, residual=float(bad))

    bad = 0
    for m in range(2, m_max + 1):
        for k in range(min(degree, 6) + 1):
            sp = slice_extension(LaurentPoly.monomial(k), m).to_polynomial()
            if sp != paravector_power(m, k):
                bad += 1
    s.case("slice_powers", "S[x0^k] equals the expanded paravector power",
           ["slice_extension", "paravector_power"], exact=True, residual=float(bad))

    worst = 0.0
    for m in (2, 3):
        f0 = LaurentPoly({3: Fraction(1), 1: Fraction(-2), 0: Fraction(1)})
        pair = intrinsic_split(f0)
        r1, r2 = pair.cr_residuals()
        if r1 or r2 or not pair.parity_ok():
            worst = max(worst, 1.0)
        sf = slice_extension(f0, m)
        for _ in range(5):
            x0 = rng.uniform(-1.5, 1.5)
            xv = [rng.uniform(-0.8, 0.8) for _ in range(m)]
            r = math.sqrt(sum(c * c for c in xv))
            val = sf.evaluate(x0, xv).to_numeric()
            a = pair.alpha_eval(x0, r)
            b = pair.beta_eval(x0, r)
            recon = CliffordElement(m, {0: a})
            if r > 0:
                recon = recon + CliffordElement.vector(m, [c / r for c in xv]).scale(b)
            worst = max(worst, (val - recon).norm_inf())
    s.case("intrinsic_split_consistency",
           "alpha/beta satisfy parity and Cauchy-Riemann; S[f0] = alpha + w beta",
           ["intrinsic_split", "slice_extension"], exact=False, residual=worst, tol=1e-10)

    bad = 0
    for m in range(2, min(m_max, 5) + 1):
        for k in range(degree + 1):
            q = appell_Q(m, k)
            if not is_monogenic(q):
                bad += 1
            if k and apply_operator(OperatorTag.HYPERCOMPLEX, q) != appell_Q(m, k - 1).scale(k):
                bad += 1
            one = q.evaluate(Fraction(1), [Fraction(0)] * m)
            if one != CliffordElement.one(m):
                bad += 1
            if appell_sum(m, k) != q:
                bad += 1
    s.case("appell_family",
           "Q_k monogenic; hypercomplex derivative lowers degree with factor k; Q_k(1)=1; "
           "explicit coefficient sum matches",
           ["appell_Q", "apply_operator", "is_monogenic"], exact=True, residual=float(bad))

    # truncated negative-power series: Cauchy-Riemann defect decays like (1/2)^N
    worst_ratio = 0.0
    m = 3
    for order in (16, 24):
        series = gck_extension(LaurentPoly.monomial(-1), m, order)
        x0, xv = 1.0, (0.25, 0.3, 0.2)  # |x| / |x0| = 0.44
        resid = series.truncation_residual(x0, xv)
        bound = 80.0 * 0.5**order
        worst_ratio = max(worst_ratio, resid / bound)
    s.case("gck_negative_tail", "truncation defect of GCK[x0^-1] bounded by C (1/2)^N",
           ["gck_extension"], exact=False, residual=worst_ratio, tol=1.0)
    return s.report


def suite_fueter(m_max: int = 6, degree: int = 8, seed: int = 11) -> VerificationReport:
    s = _Suite("fueter", {"m_max": m_max, "degree": degree, "seed": seed})
    rng = random.Random(seed)

    bad = 0
    for m in (3, 5):
        for trial in range(4):
            f0 = LaurentPoly({n: Fraction(rng.randint(-6, 6)) for n in range(degree + 1)})
            lhs = laplacian_power_route(m, f0)
            rhs = gck_extension(f0.derivative(m - 1), m).to_polynomial().scale(constants(m).gamma)
            if lhs != rhs:
                bad += 1
    s.case("odd_diagram", "Delta^((m-1)/2) S[f0] = gamma GCK[f0^(m-1)] exactly (odd m)",
           ["laplacian_power_route", "fueter_on_laurent", "gck_extension"],
           exact=True, residual=float(bad))

    bad = 0
    for m in range(1, m_max + 1):
        for ell in range(0, degree + 1):
            res = fueter_on_power(m, ell)
            in_kernel = res.branch == "kernel"
            should = ell in fueter_kernel_range(m)
            if in_kernel != should:
                bad += 1
            if res.branch == "monomial" and not is_monogenic(res.output):
                bad += 1
    s.case("kernel_branch", "the map kills x^l exactly iff 0 <= l <= m-2; outputs are monogenic",
           ["fueter_on_power", "is_monogenic"], exact=True, residual=float(bad))

    bad = 0
    for m in (2, 3, 4, 5):
        for k in range(0, min(degree, 6) + 1):
            got = fueter_on_power(m, m - 1 + k).output
            want = appell_sum(m, k).scale(
                constants(m).gamma * Fraction(math.factorial(m - 1 + k), math.factorial(k)))
            if got != want:
                bad += 1
    s.case("monomial_branch", "map of x^(m-1+k) is gamma (m-1+k)!/k! Q_k, against the explicit sum",
           ["fueter_on_power", "appell_Q"], exact=True, residual=float(bad))

    worst = 0.0
    for m in (2, 3, 4):
        for k in (1, 2, 3):
            res = fueter_on_power(m, -k, order=48)
            for x0 in (1.0, -1.0):
                xv = tuple(0.4 / math.sqrt(m) for _ in range(m))
                lhs = res.output.evaluate(x0, xv).to_numeric()
                rhs = res.closed.evaluate(x0, list(xv)).to_numeric()
                worst = max(worst, (lhs - rhs).norm_inf())
    s.case("negative_branch", "series route matches closed monomial form on both half-axes",
           ["fueter_on_power", "monogenic_monomial"], exact=False, residual=worst, tol=1e-8)

    bad = 0
    for m in (3, 5):
        for k in range(1, 5):
            pair = intrinsic_split(LaurentPoly.monomial(k))
            route = radial_route_components(m, pair).to_polynomial()
            want = fueter_on_power(m, k).output if k >= m - 1 else CliffordPolynomial.zero(m)
            if route != want:
                bad += 1
    s.case("pointwise_components", "(m-1)!! radial-derivative components reproduce the map on powers",
           ["radial_route_components", "intrinsic_split"], exact=True, residual=float(bad))

    bad = 0
    m = 3
    f0 = LaurentPoly({2: Fraction(3), -1: Fraction(1)})
    combined = fueter_on_laurent(m, f0, order=30)
    parts = fueter_on_power(m, 2, order=30).output
    neg = fueter_on_power(m, -1, order=30).output
    direct = neg + gck_extension(LaurentPoly.monomial(2).derivative(2), m, 30).scale(
        constants(m).gamma * 3)
    if combined != direct:
        bad += 1
    if combined.restrict() != f0.derivative(2).scale(constants(m).gamma):
        bad += 1
    s.case("laurent_linearity", "the map is termwise on Laurent data; restriction is gamma f0^(m-1)",
           ["fueter_on_laurent"], exact=True, residual=float(bad))
    return s.report


def _monomial_truncation_order(m: int, k: int, ratio: float, target: float = 1e-9) -> int:
    """Smallest truncation order whose certified series tail, scaled by the
    proportionality constant of the identity, sits under target."""
    from .kernels import monomial_constant

    q = k + m - 1
    const = abs(float(monomial_constant(m, k)))
    order = 12
    while order < 200:
        # explicit continuation of the term sequence plus a geometric cap
        t = 1.0
        tail = 0.0
        for j in range(1, order + 60):
            t = t * (q + j - 1) / (j if j % 2 == 0 else m + j - 1) * ratio
            if j > order:
                tail += t
        nxt = min((q + order + 59) / (order + 60) * ratio, 0.95)
        tail += t * nxt / (1 - nxt)
        if const * tail < target:
            return order
        order += 6
    return order


def suite_monomials(m_max: int = 5, k_max: int = 4, ratio: float = 0.4) -> VerificationReport:
    s = _Suite("monomials", {"m_max": m_max, "k_max": k_max, "ratio": ratio})

    bad_exact = 0
    worst_numeric = 0.0
    for m in range(2, m_max + 1):
        for k in range(1, k_max + 1):
            order = _monomial_truncation_order(m, k, ratio)
            for rep in verify_monomial_identities(m, k, order=order, ratio=ratio):
                if rep.exact:
                    if rep.residual != 0.0:
                        bad_exact += 1
                else:
                    worst_numeric = max(worst_numeric, rep.residual)
    s.case("pos_order_exact", "polynomial monomial representations hold exactly",
           ["verify_monomial_identities", "monogenic_monomial", "kelvin_inversion"],
           exact=True, residual=float(bad_exact))
    s.case("neg_order_numeric",
           "negative-order representations hold on both half-axes at certified truncation",
           ["verify_monomial_identities", "monogenic_monomial", "cauchy_kernel"],
           exact=False, residual=worst_numeric, tol=1e-8,
           params={"ratio": ratio, "order": "certified per (m,k)"})

    # kernel facts: restriction, planar case, numeric monogenicity
    worst = 0.0
    for m in (2, 3, 4):
        E = cauchy_kernel(m)
        for x0 in (0.8, -0.8):
            val = E.evaluate(x0, [0.0] * m).to_numeric()
            sgn = 1.0 if x0 > 0 else (-1.0) ** (m + 1)
            want = sgn * x0 ** (-m) / float(sphere_area(m + 1))
            worst = max(worst, abs(complex(val.scalar_part()) - want))
    s.case("kernel_restriction", "E(x0, 0) = sgn(x0)^(m+1) x0^(-m) / sigma_(m+1)",
           ["cauchy_kernel"], exact=False, residual=worst, tol=1e-12)

    worst = 0.0
    for m in (2, 3):
        E = cauchy_kernel(m)
        worst = max(worst, _fd_cr_residual(E, m, (1.0, [0.3, -0.2, 0.1][:m])))
        q2 = monogenic_monomial(m, -2)
        worst = max(worst, _fd_cr_residual(q2, m, (0.9, [0.2, 0.25, -0.1][:m])))
    s.case("kernel_fd_monogenic", "central finite differences annihilate E and P^(-2)",
           ["cauchy_kernel", "monogenic_monomial"], exact=False, residual=worst, tol=1e-6)

    worst = 0.0
    m = 3
    q23 = gck_extension(LaurentPoly.monomial(2), m)
    wrapped = kelvin_inversion(kelvin_inversion(ForwardEval(q23), m), m)
    for x0, xv in [(1.0, (0.2, -0.3, 0.4)), (-0.7, (0.1, 0.2, 0.2))]:
        direct = q23.evaluate(x0, list(xv)).to_numeric()
        twice = wrapped.evaluate(x0, xv).to_numeric()
        worst = max(worst, (direct - twice).norm_inf())
    one = kelvin_inversion(ForwardEval(gck_extension(LaurentPoly.one(), m)), m)
    E3 = cauchy_kernel(m)
    for x0, xv in [(1.1, (0.3, 0.1, -0.2))]:
        lhs = one.evaluate(x0, xv).to_numeric()
        rhs = E3.evaluate(x0, list(xv)).to_numeric().scale(float(sphere_area(m + 1)))
        worst = max(worst, (lhs - rhs).norm_inf())
    s.case("kelvin_involution", "I[I[f]] = f pointwise; I[1] = sigma_(m+1) E",
           ["kelvin_inversion"], exact=False, residual=worst, tol=1e-10)
    return s.report


class ForwardEval:
    """Adapter giving AxialSeries and friends a uniform evaluate() surface."""

    def __init__(self, obj):
        self.obj = obj

    def evaluate(self, x0, xv):
        return self.obj.evaluate(x0, list(xv)).to_numeric()


def _fd_cr_residual(form, m: int, point, h: float = 1e-5) -> float:
    """Central finite-difference Cauchy-Riemann residual of an evaluable."""
    x0, xv = point

    def val(y0, yv):
        return form.evaluate(y0, list(yv)).to_numeric()

    acc = val(x0 + h, xv) - val(x0 - h, xv)
    for j in range(m):
        up = list(xv)
        dn = list(xv)
        up[j] += h
        dn[j] -= h
        diff = val(x0, up) - val(x0, dn)
        acc = acc + CliffordElement.generator(m, j + 1).to_numeric() * diff
    return acc.scale(1.0 / (2 * h)).norm_inf()


def suite_radon(m_max: int = 4, degree: int = 6, mc_n: int = 200_000,
                seed: int = 5) -> VerificationReport:
    s = _Suite("radon", {"m_max": m_max, "degree": degree, "mc_n": mc_n, "seed": seed})

    bad = 0
    for m in range(2, m_max + 1):
        for k in range(degree + 1):
            lhs = dual_radon(slice_extension(LaurentPoly.monomial(k), m).to_polynomial())
            if lhs != appell_Q(m, k):
                bad += 1
            if not is_monogenic(lhs):
                bad += 1
    s.case("radon_bridge", "R*[S[x0^k]] = GCK[x0^k] exactly (pi cancels) and is monogenic",
           ["dual_radon", "plane_wave_gck_check", "sphere_integrate"],
           exact=True, residual=float(bad))

    bad = 0
    for m in range(2, m_max + 1):
        rep = plane_wave_gck_check(
            LaurentPoly({3: Fraction(2), 1: Fraction(-1)}), m, ExactMonomialRule(m))
        if not rep.exact or rep.residual != 0.0:
            bad += 1
    s.case("plane_wave_exact", "plane-wave average of the slice extension is the axial extension",
           ["plane_wave_gck_check"], exact=True, residual=float(bad))

    worst_se = 0.0
    for m in range(2, m_max + 1):
        mc = MonteCarloRule(m, mc_n, seed + m)
        for j in range(0, 7):
            c0, c1 = funk_hecke_constants(m, j)
            if j % 2 == 0:
                est, se = mc.integrate_monomial((j, *(0,) * (m - 1)))
                gap = abs(est - float(c0))
            else:
                est, se = mc.integrate_monomial((j + 1, *(0,) * (m - 1)))
                gap = abs(est - float(c1))
            # j = 0 integrates a constant: zero spread, gap is pure roundoff
            worst_se = max(worst_se, gap / (5 * se) if se > 0 else gap / 1e-10)
    s.case("funk_hecke_vs_mc", "exact bracket moments match Monte Carlo within 5 standard errors",
           ["funk_hecke_constants", "sphere_integrate"], exact=False,
           residual=worst_se, tol=1.0, params={"samples": mc_n})

    rng = random.Random(seed)
    worst_se = 0.0
    for m in range(2, m_max + 1):
        mc = MonteCarloRule(m, mc_n, seed + 10 * m)
        exps_list = []
        for _ in range(4):
            exps = [0] * m
            for _ in range(rng.randint(0, degree)):
                exps[rng.randrange(m)] += 1
            exps_list.append(tuple(exps))
        for exps in exps_list:
            exact_val = float(ExactMonomialRule(m).integrate_monomial(exps).to_complex().real)
            est, se = mc.integrate_monomial(exps)
            if se == 0.0:
                worst_se = max(worst_se, abs(est - exact_val))
            else:
                worst_se = max(worst_se, abs(est - exact_val) / (5 * se))
    s.case("exact_rule_vs_mc", "monomial rule agrees with Monte Carlo on random sphere polynomials",
           ["sphere_integrate"], exact=False, residual=worst_se, tol=1.0)

    worst = 0.0
    for m, level in ((1, 8), (2, 28), (3, 24)):
        pts = [(1.0, *(0.2 / math.sqrt(m),) * m), (-1.0, *(0.15 / math.sqrt(m),) * m)]
        for pt in pts:
            worst = max(worst, cauchy_plane_wave_check(m, pt, ProductGaussRule(m, level)))
            worst = max(worst, monomial_plane_wave_check(m, 2, pt, ProductGaussRule(m, level)))
    s.case("cauchy_plane_wave", "plane-wave quadrature reproduces the kernel and P^(-2), "
           "including negative x0",
           ["cauchy_plane_wave_check"], exact=False, residual=worst, tol=1e-6)
    return s.report


def suite_cst(m_list: tuple[int, ...] = (2, 3), n_hermite: int = 4,
              tol: float = 1e-7) -> VerificationReport:
    s = _Suite("cst", {"m": list(m_list), "hermite": n_hermite, "tol": tol})
    fams = [hermite_function(n) for n in range(n_hermite)]
    points = [(0.7, 0.5), (0.3, 0.8), (-0.6, 0.4)]

    worst = 0.0
    nodes, weights = np.polynomial.legendre.leggauss(260)
    y = 14.0 * nodes
    w = 14.0 * weights
    for f in fams:
        h = heat_semigroup(f)
        for x0 in (0.0, 0.8, -1.2):
            conv = np.sum(w * np.exp(-((x0 - y) ** 2) / 2)
                          * f.evaluate(y.astype(complex)).real) / math.sqrt(2 * math.pi)
            worst = max(worst, abs(conv - complex(h.evaluate(x0)).real))
    s.case("heat_is_convolution", "closed-form heat flow equals the Gaussian convolution",
           ["heat_semigroup"], exact=False, residual=worst, tol=1e-10)

    bad = 0
    for f in fams:
        for k in range(1, 6):
            lhs = f
            for _ in range(k):
                lhs = lhs.derivative()
            lhs = heat_semigroup(lhs)
            rhs = heat_semigroup(f)
            for _ in range(k):
                rhs = rhs.derivative()
            if lhs != rhs:
                bad += 1
    s.case("heat_derivative_commute", "heat flow and d_x0 commute exactly in the algebra",
           ["heat_semigroup"], exact=True, residual=float(bad))

    worst = 0.0
    f = fams[min(2, len(fams) - 1)]
    for x0 in (0.0, 0.9):
        want = complex(heat_semigroup(f).evaluate(x0))
        got = classical_cst(f, complex(x0))
        worst = max(worst, abs(want - got))
    s.case("classical_restriction", "holomorphic transform restricted to the line is the heat flow",
           ["classical_cst"], exact=False, residual=worst, tol=1e-13)

    worst = 0.0
    for f in fams[:3]:
        for x0, r in points[:2]:
            sv = slice_cst(f, x0, r)
            sv2 = slice_cst_fourier(f, x0, r)
            worst = max(worst, abs(sv.alpha - sv2.alpha), abs(sv.beta - sv2.beta))
            parity = slice_cst(f, x0, 0.0)
            worst = max(worst, abs(parity.beta))
    s.case("slice_two_routes", "entire-extension split equals the Fourier integral form; "
           "odd part vanishes on the axis",
           ["slice_cst"], exact=False, residual=worst, tol=1e-8)

    worst = 0.0
    for m in m_list:
        rule = ProductGaussRule(m, 24)
        for f in fams:
            for x0, r in points:
                xv = [r / math.sqrt(m)] * m
                a1 = axial_cst(f, m, x0, xv)
                a2 = axial_cst_radon_route(f, m, x0, xv, rule)
                worst = max(worst, (a1 - a2).norm_inf())
    s.case("axial_two_routes", "axial transform equals the dual Radon of the slice transform",
           ["axial_cst", "slice_cst", "dual_radon"], exact=False, residual=worst, tol=tol)

    worst = 0.0
    for m in m_list:
        rule = ProductGaussRule(m, 24)
        for f in fams:
            for x0, r in points:
                xv = [r / math.sqrt(m)] * m
                routes = fueter_cst_routes(f, m, x0, xv, rule)
                a = routes["heat_then_derivative"]
                worst = max(worst, (a - routes["derivative_then_heat"]).norm_inf())
                worst = max(worst, (a - routes["radon_of_slice"]).norm_inf())
    s.case("fueter_three_routes", "slice-to-axial transform agrees along all three compositions",
           ["fueter_cst", "axial_cst", "heat_semigroup"], exact=False, residual=worst, tol=tol)

    worst = 0.0
    conv_ok = 0
    for m in m_list:
        for i in range(n_hermite):
            for j in range(n_hermite):
                res = unitarity_check(fams[i], fams[j], m)
                want = 1.0 if i == j else 0.0
                worst = max(worst, abs(res.rhs - want), abs(res.lhs - want))
                if not res.converging:
                    conv_ok += 1
    s.case("unitarity_gram", "line inner products equal the weighted slice inner products "
           "on the Hermite Gram matrix, improving under refinement",
           ["unitarity_check", "slice_cst"], exact=False,
           residual=worst + conv_ok, tol=1e-5)
    return s.report


def export_payload(kind: str, m: int, k: int = 0, power: int = 0) -> dict:
    """Canonical JSON payload for one exportable object."""
    from . import serialize as ser

    if kind == "Qpoly":
        return {"kind": "Qpoly", "m": m, "k": k, "object": ser.poly_json(appell_Q(m, k))}
    if kind == "monomialP":
        mono = monogenic_monomial(m, power)
        body = ser.poly_json(mono.as_polynomial()) if power >= 0 else ser.closed_form_json(mono.closed)
        return {"kind": "monomialP", "m": m, "order": power, "object": body}
    if kind == "cauchyE":
        return {"kind": "cauchyE", "m": m, "object": ser.closed_form_json(cauchy_kernel(m))}
    if kind == "fueter_power":
        res = fueter_on_power(m, power)
        out: dict = {"kind": "fueter_power", "m": m, "power": power, "branch_tag": res.branch}
        if res.branch in ("kernel", "monomial"):
            out["object"] = ser.poly_json(res.output)
            out["cauchy_riemann_exact"] = is_monogenic(res.output) or res.output.is_zero()
        else:
            out["object"] = ser.series_json(res.output)
            out["closed_form"] = ser.closed_form_json(res.closed)
            worst = 0.0
            for x0 in (1.0, -1.0):
                xv = [0.4 / math.sqrt(m)] * m
                lhs = res.output.evaluate(x0, xv).to_numeric()
                rhs = res.closed.evaluate(x0, xv).to_numeric()
                worst = max(worst, (lhs - rhs).norm_inf())
            out["closed_form_residual"] = worst
        return out
    raise ValueError(f"unknown export kind {kind!r}")


def run_suite(name: str, params: dict | None = None) -> VerificationReport:
    """Entry point used by the command line: dispatch one suite (or all)."""
    params = dict(params or {})
    m = int(params.pop("m", 0) or 0)
    degree = int(params.pop("max_degree", 0) or 0)
    seed = int(params.pop("seed", 42))
    count = int(params.pop("count", 2000))
    mc_n = int(params.pop("mc_samples", 200_000))
    if name == "algebra":
        return suite_algebra(m or 5, count, seed)
    if name == "gck":
        return suite_gck(m or 5, degree or 8)
    if name == "fueter":
        return suite_fueter(m or 6, degree or 8, seed)
    if name == "monomials":
        return suite_monomials(m or 5, 4)
    if name == "radon":
        return suite_radon(m or 4, degree or 6, mc_n, seed)
    if name == "cst":
        return suite_cst((2, 3), 4)
    if name == "all":
        reports = [
            suite_algebra(m or 5, count, seed),
            suite_gck(min(m or 5, 5), degree or 8),
            suite_fueter(m or 6, degree or 8, seed),
            suite_monomials(min(m or 5, 5), 4),
            suite_radon(min(m or 4, 4), min(degree or 6, 6), mc_n, seed),
            suite_cst((2, 3), 4),
        ]
        combined = VerificationReport("all", {"m": m or None, "max_degree": degree or None,
                                              "seed": seed}, [])
        for rep in reports:
            for case in rep.cases:
                case = CaseResult(f"{rep.suite}.{case.case_id}", case.identity, case.params,
                                  case.exact, case.residual, case.tol, case.passed,
                                  case.ops, case.elapsed_ms)
                combined.cases.append(case)
        # exercise the export path too, round-tripping one canonical object
        import json as _json

        payload = export_payload("Qpoly", 3, 2)
        round_ok = _json.loads(_json.dumps(payload)) == payload
        combined.cases.append(
            CaseResult("export_roundtrip", "canonical export payload survives a JSON round trip",
                       {"kind": "Qpoly", "m": 3, "k": 2}, True,
                       0.0 if round_ok else 1.0, 0.0, round_ok, ["export_object"])
        )
        covered = combined.covered_ops() | {"run_suite"}
        missing = sorted(
            op for mod, ops in OP_REGISTRY.items() for op in ops if op not in covered
        )
        combined.cases.append(
            CaseResult("coverage", "each operation of every module is exercised at least once",
                       {"missing": missing}, True, float(len(missing)), 0.0,
                       not missing, ["run_suite"])
        )
        return combined
    raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
