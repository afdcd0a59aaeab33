"""Arithmetic in the real Clifford algebra with m generators and its complexification.

Basis blades are indexed by bitmasks: bit ``j`` set means the generator
``e_{j+1}`` is present, so ``0`` is the scalar blade and masks respect the
canonical ordering ``e_{j_1} .. e_{j_k}`` with ``j_1 < ... < j_k``.  The
product sign of two blades is the parity of the merge transpositions plus
one factor of -1 per contracted generator (``e_j * e_j = -1``).

Coefficients may be exact (``Fraction`` / ``PiScalar``) or numeric
(``float`` / ``complex``); the two families are not mixed implicitly.
Elements are immutable: every operation returns a fresh value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import canon, is_zero_scalar, scalar_conj, to_complex


def reorder_sign(a: int, b: int) -> int:
    """Sign from sorting the concatenation of blades ``a`` and ``b``."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(a: int, b: int) -> tuple[int, int]:
    """Product of two basis blades: resulting mask and sign."""
    sign = reorder_sign(a, b)
    if (a & b).bit_count() & 1:
        sign = -sign
    return a ^ b, sign


def blade_indices(mask: int) -> tuple[int, ...]:
    """1-based generator indices of a blade mask, ascending."""
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for j in indices:
        bit = 1 << (j - 1)
        if mask & bit:
            raise ValueError("repeated generator index")
        mask |= bit
    return mask


class CliffordElement:
    """Sparse element of the Clifford algebra with ``m`` generators."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: dict | None = None):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        self.coeffs: dict[int, object] = {}
        if coeffs:
            top = 1 << m
            for mask, c in coeffs.items():
                if not 0 <= mask < top:
                    raise ValueError(f"blade {mask:#x} outside algebra with m={m}")
                c = canon(c)
                if not is_zero_scalar(c):
                    self.coeffs[mask] = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "CliffordElement":
        return cls(m)

    @classmethod
    def scalar(cls, m: int, value) -> "CliffordElement":
        return cls(m, {0: value})

    @classmethod
    def one(cls, m: int) -> "CliffordElement":
        return cls.scalar(m, Fraction(1))

    @classmethod
    def generator(cls, m: int, j: int) -> "CliffordElement":
        """The basis vector e_j, 1-based."""
        if not 1 <= j <= m:
            raise ValueError(f"generator index {j} out of range")
        return cls(m, {1 << (j - 1): Fraction(1)})

    @classmethod
    def blade(cls, m: int, indices: Iterable[int], coeff=Fraction(1)) -> "CliffordElement":
        return cls(m, {mask_from_indices(indices): coeff})

    @classmethod
    def vector(cls, m: int, components: Sequence) -> "CliffordElement":
        if len(components) != m:
            raise ValueError("need m components")
        return cls(m, {1 << j: components[j] for j in range(m)})

    # -- linear structure ----------------------------------------------

    def _check(self, other: "CliffordElement") -> None:
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: m={self.m} vs m={other.m}")

    def __add__(self, other) -> "CliffordElement":
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._check(other)
        coeffs = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            coeffs[mask] = coeffs[mask] + c if mask in coeffs else c
        return CliffordElement(self.m, coeffs)

    def __sub__(self, other) -> "CliffordElement":
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.m, {mask: -c for mask, c in self.coeffs.items()})

    def scale(self, s) -> "CliffordElement":
        return CliffordElement(self.m, {mask: c * s for mask, c in self.coeffs.items()})

    def __mul__(self, other) -> "CliffordElement":
        if isinstance(other, CliffordElement):
            return geometric_product(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "CliffordElement":
        # scalars are central, so left and right scalar action agree
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.m, tuple(sorted((k, repr(v)) for k, v in self.coeffs.items()))))

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- algebra structure ----------------------------------------------

    def grade(self, k: int) -> "CliffordElement":
        return CliffordElement(
            self.m, {mask: c for mask, c in self.coeffs.items() if mask.bit_count() == k}
        )

    def grades(self) -> set[int]:
        return {mask.bit_count() for mask in self.coeffs}

    def scalar_part(self):
        return self.coeffs.get(0, Fraction(0))

    def vector_components(self) -> list:
        return [self.coeffs.get(1 << j, Fraction(0)) for j in range(self.m)]

    def conjugate(self) -> "CliffordElement":
        """Clifford conjugation: anti-automorphism with e_j -> -e_j."""
        out = {}
        for mask, c in self.coeffs.items():
            k = mask.bit_count()
            out[mask] = -c if (k * (k + 1) // 2) & 1 else c
        return CliffordElement(self.m, out)

    def hermitian(self) -> "CliffordElement":
        """Hermitian conjugation on the complexified algebra."""
        return CliffordElement(
            self.m, {mask: scalar_conj(c) for mask, c in self.conjugate().coeffs.items()}
        )

    def map_scalars(self, fn) -> "CliffordElement":
        return CliffordElement(self.m, {mask: fn(c) for mask, c in self.coeffs.items()})

    def to_numeric(self) -> "CliffordElement":
        """Convert coefficients to complex floats (reals stay real floats)."""

        def conv(c):
            z = to_complex(c)
            return z.real if z.imag == 0.0 else z

        return self.map_scalars(conv)

    def norm_inf(self) -> float:
        """Largest coefficient magnitude, for numeric residuals."""
        return max((abs(to_complex(c)) for c in self.coeffs.values()), default=0.0)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for mask in sorted(self.coeffs, key=lambda t: (t.bit_count(), t)):
            c = self.coeffs[mask]
            label = "" if mask == 0 else "e" + "".join(str(j) for j in blade_indices(mask))
            parts.append(f"({c}){label}" if label else f"({c})")
        return " + ".join(parts)


def geometric_product(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    """Bilinear associative product with e_j e_l + e_l e_j = -2 delta_jl."""
    a._check(b)
    coeffs: dict[int, object] = {}
    for ma, ca in a.coeffs.items():
        for mb, cb in b.coeffs.items():
            mask, sign = blade_product(ma, mb)
            c = ca * cb
            if sign < 0:
                c = -c
            coeffs[mask] = coeffs[mask] + c if mask in coeffs else c
    return CliffordElement(a.m, coeffs)


def clifford_conjugate(a: CliffordElement) -> CliffordElement:
    return a.conjugate()


def hermitian_conjugate(a: CliffordElement) -> CliffordElement:
    return a.hermitian()


@dataclass(frozen=True)
class Paravector:
    """Point x0 + x1 e_1 + ... + xm e_m of (m+1)-dimensional space."""

    x0: object
    xv: tuple

    @property
    def m(self) -> int:
        return len(self.xv)

    def to_element(self) -> CliffordElement:
        coeffs = {0: self.x0}
        coeffs.update({1 << j: self.xv[j] for j in range(self.m)})
        return CliffordElement(self.m, coeffs)

    def conj(self) -> "Paravector":
        return Paravector(self.x0, tuple(-c for c in self.xv))

    def norm_sq(self):
        return self.x0 * self.x0 + sum(c * c for c in self.xv)

    def vector_norm_sq(self):
        return sum(c * c for c in self.xv)
