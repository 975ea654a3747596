from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class UnitVector3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        n2 = self.x * self.x + self.y * self.y + self.z * self.z
        if not abs(n2 - 1.0) <= UNIT_TOL:
            raise ValueError(f"not a unit vector: ({self.x}, {self.y}, {self.z}) has squared norm {n2!r}")

    @classmethod
    def normalized(cls, v) -> "UnitVector3":
        v = np.asarray(v, dtype=float)
        n = math.sqrt(float(v @ v))
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(*(float(t) for t in v / n))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def dot(self, other: "UnitVector3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def __neg__(self):
        return UnitVector3(-self.x, -self.y, -self.z)


X_HAT = UnitVector3(1.0, 0.0, 0.0)
Y_HAT = UnitVector3(0.0, 1.0, 0.0)
Z_HAT = UnitVector3(0.0, 0.0, 1.0)


def sample_unit_vector(rng: np.random.Generator) -> UnitVector3:
    """Uniform direction on the 2-sphere from a normalized Gaussian triple."""
    while True:
        v = rng.standard_normal(3)
        if v @ v > 1e-300:
            return UnitVector3.normalized(v)
