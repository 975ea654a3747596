"""The even subalgebra of Cl(4,0) written as quaternion pairs ``q_r + q_d eps``.

Coordinates of a K-element are the eight reals ``(g, u, h, v)`` with
``q_r = g + I3 u`` and ``q_d = h + I3 v``.  The orientation tag ``lam`` scales
the seven non-scalar basis blades, so the same coordinates describe different
multivectors in the two orientations.

Two norms live side by side here:

* the geometric norm, ``sqrt(X X^dagger)`` taken as a principal split-complex
  square root, which is hyperbolic-valued;
* the scalar norm, the 8-dimensional Euclidean length of the coordinates,
  reported together with the eps-coefficient of ``X X^dagger`` (the
  orthogonality defect) that decides whether it is the norm of a point on S^7.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import multivector as mv
from .multivector import Multivector

ORIENTATIONS = (1, -1)
COORD_NAMES = ("g", "u_x", "u_y", "u_z", "h", "v_x", "v_y", "v_z")


def _check_orientation(lam: int) -> int:
    if lam not in ORIENTATIONS:
        raise ValueError(f"orientation must be +1 or -1, got {lam!r}")
    return int(lam)


# --------------------------------------------------------------------------
# split-complex numbers


@dataclass(frozen=True)
class Hyperbolic:
    """Split-complex number ``c + d eps`` with ``eps**2 = +1``."""

    c: float
    d: float = 0.0

    def __add__(self, other):
        other = _as_hyperbolic(other)
        return Hyperbolic(self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_hyperbolic(other)
        return Hyperbolic(self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Hyperbolic(-self.c, -self.d)

    def __mul__(self, other):
        other = _as_hyperbolic(other)
        return Hyperbolic(self.c * other.c + self.d * other.d, self.c * other.d + self.d * other.c)

    __rmul__ = __mul__

    def conjugate(self) -> "Hyperbolic":
        return Hyperbolic(self.c, -self.d)

    def modulus_squared(self) -> float:
        """``(c + d eps)(c - d eps) = c**2 - d**2``; zero on the light cone."""
        return self.c * self.c - self.d * self.d

    def is_zero_divisor(self, tol: float = 0.0) -> bool:
        return abs(abs(self.c) - abs(self.d)) <= tol and (self.c, self.d) != (0.0, 0.0)

    def in_cone(self, tol: float = 0.0) -> bool:
        return self.c + tol >= abs(self.d)

    def isclose(self, other, rel_tol: float = 1e-12, abs_tol: float = 1e-15) -> bool:
        other = _as_hyperbolic(other)
        scale = max(abs(self.c), abs(self.d), abs(other.c), abs(other.d))
        err = max(abs(self.c - other.c), abs(self.d - other.d))
        return err <= max(rel_tol * scale, abs_tol)

    def sqrt(self, tol: float = 1e-12) -> "Hyperbolic":
        return hyperbolic_sqrt(self, tol)

    def as_tuple(self) -> tuple[float, float]:
        return (self.c, self.d)


def _as_hyperbolic(x) -> Hyperbolic:
    if isinstance(x, Hyperbolic):
        return x
    if isinstance(x, (int, float, np.floating, np.integer)):
        return Hyperbolic(float(x), 0.0)
    raise TypeError(f"cannot use {type(x).__name__} as a split-complex number")


class OutOfConeError(ValueError):
    """Raised for a split-complex square root requested outside ``c >= |d|``."""


def hyperbolic_sqrt(h: Hyperbolic, tol: float = 1e-12) -> Hyperbolic:
    """Principal square root ``p + q eps`` with ``p >= |q|``.

    In the null basis ``c + d eps`` has components ``c + d`` and ``c - d``;
    both must be non-negative and the root takes the non-negative square
    root of each.  Negative components within ``tol * |c|`` of zero are
    treated as rounding and clamped.
    """
    plus, minus = h.c + h.d, h.c - h.d
    slack = tol * max(abs(h.c), abs(h.d))
    if plus < -slack or minus < -slack:
        raise OutOfConeError(f"{h.c!r} + {h.d!r} eps lies outside the future light cone")
    rp, rm = math.sqrt(max(plus, 0.0)), math.sqrt(max(minus, 0.0))
    return Hyperbolic(0.5 * (rp + rm), 0.5 * (rp - rm))


def hyperbolic_sqrt_batch(c: np.ndarray, d: np.ndarray, tol: float = 1e-12) -> tuple[np.ndarray, np.ndarray]:
    plus, minus = c + d, c - d
    slack = tol * np.maximum(np.abs(c), np.abs(d))
    if np.any(plus < -slack) or np.any(minus < -slack):
        raise OutOfConeError("split-complex input outside the future light cone")
    rp, rm = np.sqrt(np.maximum(plus, 0.0)), np.sqrt(np.maximum(minus, 0.0))
    return 0.5 * (rp + rm), 0.5 * (rp - rm)


# --------------------------------------------------------------------------
# quaternions and K-elements


@dataclass(frozen=True)
class Quaternion:
    """``g + I3 u`` with ``I3 = e1 e2 e3``."""

    g: float = 0.0
    u: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "g", float(self.g))
        object.__setattr__(self, "u", tuple(float(x) for x in self.u))
        if len(self.u) != 3:
            raise ValueError("quaternion vector part needs three components")

    def norm_squared(self) -> float:
        return self.g * self.g + sum(x * x for x in self.u)


@dataclass(frozen=True)
class KElement:
    q_r: Quaternion = field(default_factory=Quaternion)
    q_d: Quaternion = field(default_factory=Quaternion)
    lam: int = 1

    def __post_init__(self):
        _check_orientation(self.lam)

    @classmethod
    def from_coords(cls, coords: Iterable[float], lam: int = 1) -> "KElement":
        c = [float(x) for x in coords]
        if len(c) != 8:
            raise ValueError(f"expected 8 coordinates, got {len(c)}")
        return cls(Quaternion(c[0], tuple(c[1:4])), Quaternion(c[4], tuple(c[5:8])), lam)

    @classmethod
    def scalar(cls, x: float, lam: int = 1) -> "KElement":
        return cls(Quaternion(x), Quaternion(), lam)

    @classmethod
    def epsilon(cls, lam: int = 1) -> "KElement":
        """The K-element with ``q_d = 1``; embeds as ``lam * eps``."""
        return cls(Quaternion(), Quaternion(1.0), lam)

    def coords(self) -> np.ndarray:
        return np.array([self.q_r.g, *self.q_r.u, self.q_d.g, *self.q_d.u])

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = KElement.scalar(other, self.lam)
        _same_orientation(self, other)
        return KElement.from_coords(self.coords() + other.coords(), self.lam)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = KElement.scalar(other, self.lam)
        _same_orientation(self, other)
        return KElement.from_coords(self.coords() - other.coords(), self.lam)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return KElement.from_coords(-self.coords(), self.lam)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return KElement.from_coords(self.coords() * other, self.lam)
        if isinstance(other, KElement):
            return k_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return KElement.from_coords(self.coords() * other, self.lam)
        return NotImplemented

    def isclose(self, other: "KElement", tol: float = 1e-12) -> bool:
        return self.lam == other.lam and bool(np.allclose(self.coords(), other.coords(), rtol=tol, atol=tol))


def _same_orientation(x: KElement, y: KElement) -> None:
    if x.lam != y.lam:
        raise ValueError("K-elements of opposite orientation cannot be combined")


def _basis_at_positive_orientation() -> list[Multivector]:
    spatial = [mv.I3 * e for e in (mv.E1, mv.E2, mv.E3)]
    return [Multivector.scalar(1.0), *spatial, mv.EPSILON, *(b * mv.EPSILON for b in spatial)]


def orientation_matrix() -> np.ndarray:
    """Diagonal change of basis taking the positive-orientation basis to the
    negative one: the scalar is kept, the seven other blades flip."""
    return np.diag([1.0] + [-1.0] * 7)


_BASIS_PLUS = np.stack([b.coeffs for b in _basis_at_positive_orientation()], axis=1)
EMBEDDING = {lam: _BASIS_PLUS @ (orientation_matrix() if lam == -1 else np.eye(8)) for lam in ORIENTATIONS}


def embed(x: KElement) -> Multivector:
    return Multivector(EMBEDDING[x.lam] @ x.coords())


def extract(m: Multivector, lam: int = 1, tol: float = 1e-12) -> KElement:
    _check_orientation(lam)
    basis = EMBEDDING[lam]
    # columns are signed unit blades, so the transpose is the inverse
    coords = basis.T @ m.coeffs
    leftover = m.coeffs - basis @ coords
    scale = max(1.0, float(np.max(np.abs(m.coeffs))))
    if np.max(np.abs(leftover)) > tol * scale:
        raise ValueError("multivector has odd-grade content and is not in the even subalgebra")
    return KElement.from_coords(coords, lam)


def _k_structure(lam: int) -> np.ndarray:
    basis = EMBEDDING[lam]
    out = np.empty((8, 8, 8))
    for i in range(8):
        for j in range(8):
            prod = mv.geometric_product(Multivector(basis[:, i]), Multivector(basis[:, j]))
            out[i, j] = basis.T @ prod.coeffs
    return out


K_STRUCTURE = {lam: _k_structure(lam) for lam in ORIENTATIONS}


def k_product(x: KElement, y: KElement) -> KElement:
    _same_orientation(x, y)
    return extract(mv.geometric_product(embed(x), embed(y)), x.lam)


def k_product_batch(x: np.ndarray, y: np.ndarray, lam: int = 1) -> np.ndarray:
    """Row-wise product of coordinate arrays of shape ``(n, 8)``."""
    _check_orientation(lam)
    return np.einsum("...i,...j,ijk->...k", x, y, K_STRUCTURE[lam], optimize=True)


# --------------------------------------------------------------------------
# norms


def quadratic_form(x: KElement) -> Hyperbolic:
    """``X X^dagger`` in closed form, read back in the element's own basis.

    ``c = g^2 + u.u + h^2 + v.v`` and ``d = 2 g h + 2 lam u.v``.  Flipping the
    orientation negates the vector parts of both quaternions but also the
    scalar part of ``q_d``, which is why ``u.v`` carries the tag and ``g h``
    does not.
    """
    c, d = quadratic_form_batch(x.coords(), x.lam)
    return Hyperbolic(float(c), float(d))


def quadratic_form_batch(coords: np.ndarray, lam: int = 1) -> tuple[np.ndarray, np.ndarray]:
    _check_orientation(lam)
    coords = np.asarray(coords, dtype=float)
    q_r, q_d = coords[..., :4], coords[..., 4:]
    c = np.sum(q_r * q_r, axis=-1) + np.sum(q_d * q_d, axis=-1)
    d = 2.0 * (q_r[..., 0] * q_d[..., 0] + lam * np.sum(q_r[..., 1:] * q_d[..., 1:], axis=-1))
    return c, d


def geometric_norm(x: KElement) -> Hyperbolic:
    return hyperbolic_sqrt(quadratic_form(x))


def geometric_norm_batch(coords: np.ndarray, lam: int = 1) -> tuple[np.ndarray, np.ndarray]:
    return hyperbolic_sqrt_batch(*quadratic_form_batch(coords, lam))


def orthogonality_defect(x: KElement) -> float:
    """eps-coefficient of ``X X^dagger``; ``2 g h + 2 u.v`` at positive orientation."""
    return quadratic_form(x).d


def scalar_norm(x: KElement) -> float:
    # hypot scales internally, so tiny nonzero elements keep a nonzero norm
    return math.hypot(*x.coords())


def scalar_norm_batch(coords: np.ndarray) -> np.ndarray:
    coords = np.asarray(coords, dtype=float)
    scale = np.max(np.abs(coords), axis=-1)
    safe = np.where(scale > 0, scale, 1.0)
    return scale * np.sqrt(np.sum((coords / safe[..., None]) ** 2, axis=-1))


@dataclass(frozen=True)
class NormSummary:
    geometric: Hyperbolic
    scalar: float
    defect: float

    @property
    def scalar_condition_holds(self) -> bool:
        return self.defect == 0.0


def norms(x: KElement) -> NormSummary:
    q = quadratic_form(x)
    return NormSummary(hyperbolic_sqrt(q), math.sqrt(q.c), q.d)


@dataclass(frozen=True)
class CompositionReport:
    lhs: Hyperbolic
    rhs: Hyperbolic
    equal: bool


def verify_composition(x: KElement, y: KElement, rel_tol: float = 1e-10) -> CompositionReport:
    """Compare ``||XY||`` with ``||X|| ||Y||`` using geometric norms throughout."""
    lhs = geometric_norm(k_product(x, y))
    rhs = geometric_norm(x) * geometric_norm(y)
    return CompositionReport(lhs, rhs, lhs.isclose(rhs, rel_tol=rel_tol, abs_tol=rel_tol))


def composition_errors(x: np.ndarray, y: np.ndarray, lam: int = 1) -> np.ndarray:
    """Relative mismatch of the composition law for each row pair."""
    lc, ld = geometric_norm_batch(k_product_batch(x, y, lam), lam)
    xc, xd = geometric_norm_batch(x, lam)
    yc, yd = geometric_norm_batch(y, lam)
    rc, rd = xc * yc + xd * yd, xc * yd + xd * yc
    scale = np.maximum.reduce([np.abs(rc), np.abs(rd), np.abs(lc), np.abs(ld)])
    return np.maximum(np.abs(lc - rc), np.abs(ld - rd)) / np.maximum(scale, 1e-300)


def is_on_seven_sphere(x: KElement, radius: float = 1.0, tol: float = 1e-12) -> bool:
    if radius <= 0:
        raise ValueError("radius must be positive")
    q = quadratic_form(x)
    return abs(q.d) <= tol and abs(math.sqrt(q.c) - radius) <= tol


def orientation_determinant() -> float:
    return float(np.linalg.det(orientation_matrix()))
