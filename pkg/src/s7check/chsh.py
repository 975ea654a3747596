"""Quantum-side CHSH checks: spin operators, spectra and the +-2 enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .jacobi import hermitian_eigenvalues
from .vectors import UnitVector3, X_HAT, Y_HAT

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# (|01> - |10>) / sqrt(2)
SINGLET = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2.0)

TSIRELSON = 2.0 * np.sqrt(2.0)


def _unit(a) -> UnitVector3:
    return a if isinstance(a, UnitVector3) else UnitVector3(*a)


def pauli_dot(a: UnitVector3) -> np.ndarray:
    a = _unit(a)
    return a.x * SIGMA_X + a.y * SIGMA_Y + a.z * SIGMA_Z


def spin_sum_spectrum(a: UnitVector3, b: UnitVector3) -> np.ndarray:
    return hermitian_eigenvalues(pauli_dot(a) + pauli_dot(b))


def chsh_operator(a: UnitVector3, a2: UnitVector3, b: UnitVector3, b2: UnitVector3) -> np.ndarray:
    sa, sa2, sb, sb2 = (pauli_dot(v) for v in (a, a2, b, b2))
    return np.kron(sa, sb) + np.kron(sa, sb2) + np.kron(sa2, sb) - np.kron(sa2, sb2)


def tsirelson_settings() -> tuple[UnitVector3, UnitVector3, UnitVector3, UnitVector3]:
    r = 1.0 / np.sqrt(2.0)
    return X_HAT, Y_HAT, UnitVector3(r, r, 0.0), UnitVector3(r, -r, 0.0)


def singlet_expectation(a: UnitVector3, b: UnitVector3) -> float:
    op = np.kron(pauli_dot(a), pauli_dot(b))
    return float(np.real(SINGLET.conj() @ op @ SINGLET))


def chsh_combination(A: int, A2: int, B: int, B2: int) -> int:
    return A * B + A * B2 + A2 * B - A2 * B2


def boole_bound_enumeration() -> dict[tuple[int, int, int, int], int]:
    """Value of the CHSH combination for every assignment of four +-1 outcomes."""
    return {signs: chsh_combination(*signs) for signs in itertools.product((1, -1), repeat=4)}


@dataclass(frozen=True)
class AdditivityReport:
    spectrum: tuple[float, ...]
    combination_values: tuple[int, ...]
    combination_set: tuple[int, ...]
    shared_values: tuple[float, ...]
    spectral_radius: float

    @property
    def extremes_disjoint(self) -> bool:
        """True when neither spectral extreme is a value of the combination."""
        ends = (self.spectrum[0], self.spectrum[-1])
        return not any(e in self.shared_values for e in ends)


def eigenvalue_additivity_report(a, a2, b, b2, tol: float = 1e-9) -> AdditivityReport:
    spectrum = hermitian_eigenvalues(chsh_operator(a, a2, b, b2))
    values = tuple(boole_bound_enumeration().values())
    combo = tuple(sorted(set(values)))
    shared = tuple(float(e) for e in spectrum if any(abs(e - v) <= tol for v in combo))
    return AdditivityReport(
        spectrum=tuple(float(e) for e in spectrum),
        combination_values=values,
        combination_set=combo,
        shared_values=shared,
        spectral_radius=float(np.max(np.abs(spectrum))),
    )


Outcome = Callable[[object, int], int]


@dataclass(frozen=True)
class LinearityReport:
    sum_of_expectations: Fraction
    expectation_of_sum: Fraction
    correlations: tuple[Fraction, Fraction, Fraction, Fraction]

    @property
    def difference(self) -> Fraction:
        return self.sum_of_expectations - self.expectation_of_sum

    @property
    def equal(self) -> bool:
        return self.difference == 0


def expectation_linearity_check(
    lambdas: Sequence[int],
    A: Outcome,
    B: Outcome,
    settings: tuple[object, object, object, object],
) -> LinearityReport:
    """Both sides of the CHSH expectation identity as exact averages over one
    shared sample of hidden variables.

    ``A(setting, lam)`` and ``B(setting, lam)`` return +-1 outcomes;
    ``settings`` is ``(a, a', b, b')``.
    """
    if len(lambdas) == 0:
        raise ValueError("need at least one hidden-variable sample")
    a, a2, b, b2 = settings
    n = len(lambdas)
    pairs = ((a, b), (a, b2), (a2, b), (a2, b2))
    sums = [sum(A(x, lam) * B(y, lam) for lam in lambdas) for x, y in pairs]
    corr = tuple(Fraction(s, n) for s in sums)
    lhs = corr[0] + corr[1] + corr[2] - corr[3]
    integrand = sum(
        A(a, lam) * B(b, lam) + A(a, lam) * B(b2, lam) + A(a2, lam) * B(b, lam) - A(a2, lam) * B(b2, lam)
        for lam in lambdas
    )
    return LinearityReport(lhs, Fraction(integrand, n), corr)
