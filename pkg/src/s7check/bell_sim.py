"""Monte Carlo run of the singlet model on the quaternionic 3-sphere.

Each trial draws an orientation ``lam`` with a fair coin.  The outcomes are
``A = lam`` and ``B = -lam``; the trial quaternion is the product of the two
detector bivectors, taken as ``D(a) D(b)`` for ``lam = +1`` and ``D(b) D(a)``
otherwise.  Swapping the order leaves the scalar part ``-a.b`` alone and
flips the sign of the bivector part, so the averaged quaternion converges to
the scalar ``-a.b`` while the bivector residue shrinks like ``1/sqrt(n)``.

Trials are grouped in fixed-size shards.  Shard ``k`` draws from a Philox
stream keyed by ``(seed, k)``, and shards only contribute integer counts, so
the result does not depend on how many workers ran them.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .even_algebra import KElement, Quaternion, k_product
from .vectors import UnitVector3

SHARD_SIZE = 1 << 16


@dataclass(frozen=True)
class TrialRecord:
    lam: int
    A: int
    B: int
    q: KElement


@dataclass(frozen=True)
class CorrelationEstimate:
    a: UnitVector3
    b: UnitVector3
    n: int
    n_plus: int
    scalar_mean: float
    bivector_residual: float
    stderr: float
    mean_quaternion: tuple[float, ...]
    mean_A: float
    mean_B: float
    product_moment: float

    @property
    def scalar_error(self) -> float:
        """``scalar_mean + a.b``; zero when the target correlation is hit."""
        return self.scalar_mean + self.a.dot(self.b)


def shard_generator(seed: int, shard: int) -> np.random.Generator:
    if seed < 0 or shard < 0:
        raise ValueError("seed and shard index must be non-negative")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(shard,))))


def detector_bivector(a: UnitVector3) -> KElement:
    """``D(a) = I3 a``, a unit bivector squaring to -1."""
    if not isinstance(a, UnitVector3):
        a = UnitVector3(*a)
    return KElement(Quaternion(0.0, (a.x, a.y, a.z)))


def measurement_outcomes(lam: int) -> tuple[int, int]:
    if lam not in (1, -1):
        raise ValueError(f"orientation must be +1 or -1, got {lam!r}")
    return lam, -lam


def trial_product(a: UnitVector3, b: UnitVector3, lam: int) -> KElement:
    da, db = detector_bivector(a), detector_bivector(b)
    if lam == 1:
        return k_product(da, db)
    if lam == -1:
        return k_product(db, da)
    raise ValueError(f"orientation must be +1 or -1, got {lam!r}")


def draw_orientations(seed: int, shard: int, size: int) -> np.ndarray:
    bits = shard_generator(seed, shard).integers(0, 2, size=size, dtype=np.int8)
    return (2 * bits - 1).astype(np.int8)


def _shard_sizes(n: int, shard_size: int) -> list[int]:
    full, rest = divmod(n, shard_size)
    return [shard_size] * full + ([rest] if rest else [])


def _count_plus(args: tuple[int, int, int]) -> int:
    seed, shard, size = args
    return int(np.count_nonzero(draw_orientations(seed, shard, size) == 1))


def orientations(n: int, seed: int, shard_size: int = SHARD_SIZE) -> np.ndarray:
    """The full per-trial orientation stream of a run, in trial order."""
    sizes = _shard_sizes(n, shard_size)
    return np.concatenate([draw_orientations(seed, k, s) for k, s in enumerate(sizes)])


def simulate(
    a: UnitVector3,
    b: UnitVector3,
    n: int,
    seed: int,
    *,
    workers: int = 1,
    shard_size: int = SHARD_SIZE,
) -> CorrelationEstimate:
    if n < 1:
        raise ValueError("number of trials must be at least 1")
    jobs = [(seed, k, s) for k, s in enumerate(_shard_sizes(n, shard_size))]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            n_plus = sum(pool.map(_count_plus, jobs))
        n_plus = int(n_plus)
    else:
        n_plus = sum(_count_plus(job) for job in jobs)
    return _estimate(a, b, n, n_plus)


def _estimate(a: UnitVector3, b: UnitVector3, n: int, n_plus: int) -> CorrelationEstimate:
    q_plus = trial_product(a, b, 1).coords()
    q_minus = trial_product(a, b, -1).coords()
    m = (n_plus - (n - n_plus)) / n  # mean orientation
    # midpoint form keeps the branch-independent scalar part exact
    mean_q = 0.5 * (q_plus + q_minus) + 0.5 * m * (q_plus - q_minus)
    bivector = float(np.linalg.norm(mean_q[1:]))
    spread = float(np.linalg.norm(0.5 * (q_plus - q_minus)[1:]))
    var_lam = max(0.0, 1.0 - m * m) * n / (n - 1) if n > 1 else 0.0
    return CorrelationEstimate(
        a=a,
        b=b,
        n=n,
        n_plus=n_plus,
        scalar_mean=float(mean_q[0]),
        bivector_residual=bivector,
        stderr=spread * math.sqrt(var_lam / n),
        mean_quaternion=tuple(float(t) for t in mean_q),
        mean_A=m,
        mean_B=-m,
        product_moment=-1.0,
    )


def trial_records(a: UnitVector3, b: UnitVector3, n: int, seed: int, shard_size: int = SHARD_SIZE) -> list[TrialRecord]:
    q = {1: trial_product(a, b, 1), -1: trial_product(a, b, -1)}
    out = []
    for lam in orientations(n, seed, shard_size).tolist():
        A, B = measurement_outcomes(lam)
        out.append(TrialRecord(lam, A, B, q[lam]))
    return out


def write_trials_csv(path: str | Path, records: list[TrialRecord]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["trial", "lambda", "A", "B", *(f"q{i}" for i in range(8))])
        for i, r in enumerate(records):
            w.writerow([i, r.lam, r.A, r.B, *(repr(float(c)) for c in r.q.coords())])
