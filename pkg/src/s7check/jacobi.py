"""Cyclic Jacobi eigensolver for small Hermitian matrices.

A complex Hermitian ``H = A + iB`` is handled through its real symmetric
embedding ``[[A, -B], [B, A]]``, whose spectrum is that of ``H`` with every
eigenvalue doubled.
"""

from __future__ import annotations

import math

import numpy as np

OFF_TOL = 1e-12
MAX_SWEEPS = 100
HERMITIAN_TOL = 1e-12


class NotHermitianError(ValueError):
    pass


class NoConvergenceError(RuntimeError):
    pass


def jacobi_symmetric(s: np.ndarray, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and eigenvector columns of a real symmetric matrix.

    Sweeps over all upper-triangular pivots in row order until the
    off-diagonal Frobenius norm falls below ``tol`` times the Frobenius norm
    of the input (or ``tol`` itself for the zero matrix).
    """
    s = np.asarray(s, dtype=float)
    n = s.shape[0]
    # plain lists: for n <= 8 per-element Python beats numpy call overhead
    a = s.tolist()
    v = np.eye(n).tolist()
    threshold = tol * max(1.0, float(np.linalg.norm(s)))
    idx = range(n)
    for _ in range(max_sweeps + 1):
        off = math.sqrt(sum(a[i][j] * a[i][j] for i in idx for j in idx if i != j))
        if off <= threshold:
            return np.array([a[i][i] for i in idx]), np.array(v)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                sn = t * c
                for r in idx:
                    arp, arq = a[r][p], a[r][q]
                    a[r][p] = c * arp - sn * arq
                    a[r][q] = sn * arp + c * arq
                rp, rq = a[p], a[q]
                for r in idx:
                    apr, aqr = rp[r], rq[r]
                    rp[r] = c * apr - sn * aqr
                    rq[r] = sn * apr + c * aqr
                for row in v:
                    vp, vq = row[p], row[q]
                    row[p] = c * vp - sn * vq
                    row[q] = sn * vp + c * vq
    raise NoConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def check_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotHermitianError(f"expected a square matrix, got shape {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m))))
    if np.max(np.abs(m - m.conj().T)) > tol * scale:
        raise NotHermitianError("matrix is not Hermitian")
    return m


def real_embedding(m: np.ndarray) -> np.ndarray:
    a, b = m.real, m.imag
    return np.block([[a, -b], [b, a]])


def hermitian_eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and matching complex eigenvector columns."""
    m = check_hermitian(m)
    n = m.shape[0]
    w, v = jacobi_symmetric(real_embedding(m))
    order = np.argsort(w, kind="stable")
    w, v = w[order], v[:, order]
    # eigenvalues come in equal pairs; [x; y] maps to the complex vector x + iy
    vals = 0.5 * (w[0::2] + w[1::2])
    vecs = v[:n, 0::2] + 1j * v[n:, 0::2]
    vecs /= np.linalg.norm(vecs, axis=0)
    return vals, vecs


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    return hermitian_eigh(m)[0]
