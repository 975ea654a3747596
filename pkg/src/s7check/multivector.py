"""Dense arithmetic in the real Clifford algebra Cl(4,0).

Basis blades are encoded as 4-bit masks, generator ``e_i`` on bit ``i - 1``
(``e4`` plays the role of the conformal point at infinity).  Every generator
squares to +1.  The blade multiplication table is derived at import time from
the transposition-parity rule rather than transcribed.
"""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np

N_GENERATORS = 4
DIM = 1 << N_GENERATORS

REL_TOL = 1e-12
ABS_TOL = 1e-15

Scalar = Union[int, float]


def grade(mask: int) -> int:
    if not 0 <= mask < DIM:
        raise ValueError(f"blade mask out of range: {mask}")
    return bin(mask).count("1")


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e" + "".join(str(i + 1) for i in range(N_GENERATORS) if mask >> i & 1)


def reorder_sign(a: int, b: int) -> int:
    """Sign picked up when the generators of blade ``a`` followed by those of
    blade ``b`` are sorted into ascending order.

    Each generator of ``b`` has to move left past every generator of ``a``
    with a larger index; squares are +1 so coincident pairs just cancel.
    """
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def _build_tables() -> tuple[np.ndarray, np.ndarray]:
    index = np.empty((DIM, DIM), dtype=np.intp)
    sign = np.empty((DIM, DIM), dtype=float)
    for a in range(DIM):
        for b in range(DIM):
            index[a, b] = a ^ b
            sign[a, b] = reorder_sign(a, b)
    return index, sign


PRODUCT_INDEX, PRODUCT_SIGN = _build_tables()
GRADES = np.array([grade(m) for m in range(DIM)])
REVERSE_SIGN = np.array([(-1.0) ** (k * (k - 1) // 2) for k in GRADES])

# Dense structure tensor: (a b)[k] = sum_ij a[i] b[j] STRUCTURE[i, j, k].
STRUCTURE = np.zeros((DIM, DIM, DIM))
STRUCTURE[np.arange(DIM)[:, None], np.arange(DIM)[None, :], PRODUCT_INDEX] = PRODUCT_SIGN


class Multivector:
    """A Cl(4,0) element held as 16 real coefficients indexed by blade mask."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[float] | None = None):
        if coeffs is None:
            arr = np.zeros(DIM)
        else:
            arr = np.array(coeffs, dtype=float)
            if arr.shape != (DIM,):
                raise ValueError(f"expected {DIM} coefficients, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("multivector coefficients must be finite")
        self.coeffs = arr

    @classmethod
    def scalar(cls, value: Scalar) -> "Multivector":
        out = cls()
        out.coeffs[0] = value
        return out

    @classmethod
    def blade(cls, mask: int, value: Scalar = 1.0) -> "Multivector":
        grade(mask)
        out = cls()
        out.coeffs[mask] = value
        return out

    @classmethod
    def vector(cls, v: Iterable[float]) -> "Multivector":
        """Grade-1 element from up to four components along e1..e4."""
        out = cls()
        for i, x in enumerate(v):
            out.coeffs[1 << i] = x
        return out

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(other.coeffs - self.coeffs)

    def __neg__(self):
        return Multivector(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.coeffs * other)
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.coeffs * other)
        return NotImplemented

    def __invert__(self):
        return reverse(self)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def isclose(self, other, rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL) -> bool:
        other = _coerce(other)
        scale = max(np.max(np.abs(self.coeffs)), np.max(np.abs(other.coeffs)))
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= max(rel_tol * scale, abs_tol))

    def grade(self, k: int) -> "Multivector":
        return grade_projection(self, k)

    def is_even(self, tol: float = ABS_TOL) -> bool:
        return bool(np.all(np.abs(self.coeffs[GRADES % 2 == 1]) <= tol))

    def __repr__(self):
        terms = [
            f"{c:+.6g}*{blade_name(m)}" if m else f"{c:+.6g}"
            for m, c in enumerate(self.coeffs)
            if c != 0.0
        ]
        return "Multivector(" + (" ".join(terms) if terms else "0") + ")"


def _coerce(x) -> Multivector:
    if isinstance(x, Multivector):
        return x
    if isinstance(x, (int, float, np.floating, np.integer)):
        return Multivector.scalar(x)
    return NotImplemented


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    terms = np.outer(a.coeffs, b.coeffs) * PRODUCT_SIGN
    return Multivector(np.bincount(PRODUCT_INDEX.ravel(), weights=terms.ravel(), minlength=DIM))


def product_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Geometric product of stacked coefficient arrays of shape ``(..., 16)``."""
    return np.einsum("...i,...j,ijk->...k", a, b, STRUCTURE, optimize=True)


def reverse(a: Multivector) -> Multivector:
    return Multivector(a.coeffs * REVERSE_SIGN)


def grade_projection(a: Multivector, k: int) -> Multivector:
    if not isinstance(k, (int, np.integer)) or not 0 <= k <= N_GENERATORS:
        raise ValueError(f"grade must be an integer in 0..{N_GENERATORS}, got {k!r}")
    return Multivector(np.where(GRADES == k, a.coeffs, 0.0))


def scalar_part(a: Multivector) -> float:
    return float(a.coeffs[0])


E1 = Multivector.blade(0b0001)
E2 = Multivector.blade(0b0010)
E3 = Multivector.blade(0b0100)
E4 = Multivector.blade(0b1000)
I3 = Multivector.blade(0b0111)
EPSILON = Multivector.blade(0b1111)
