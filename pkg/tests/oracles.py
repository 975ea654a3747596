"""Independent reference computations used only by the tests."""

import itertools

import mpmath
import numpy as np


def blade_product_by_permutation(a_gens, b_gens):
    """Multiply two blades given as generator lists (1-based) by brute force.

    Counts inversions of the concatenated word (the parity of the sorting
    permutation), then cancels equal adjacent generators (each squares to +1).
    """
    word = list(a_gens) + list(b_gens)
    inversions = sum(1 for i, j in itertools.combinations(range(len(word)), 2) if word[i] > word[j])
    word.sort()
    out = []
    for g in word:
        if out and out[-1] == g:
            out.pop()
        else:
            out.append(g)
    return (-1) ** inversions, tuple(out)


def mask_to_gens(mask):
    return tuple(i + 1 for i in range(4) if mask >> i & 1)


def gens_to_mask(gens):
    return sum(1 << (g - 1) for g in gens)


def quat_mul(p, q):
    """Product of quaternions written ``g + I3 u``: (g, u) pairs."""
    g1, u1 = p[0], np.asarray(p[1:])
    g2, u2 = q[0], np.asarray(q[1:])
    g = g1 * g2 - u1 @ u2
    u = g1 * u2 + g2 * u1 - np.cross(u1, u2)
    return np.array([g, *u])


def k_mul_positive(x, y):
    """K-element product at positive orientation from the quaternion-pair rule
    (q_r1 + q_d1 eps)(q_r2 + q_d2 eps) with eps central and eps^2 = 1."""
    r1, d1, r2, d2 = x[:4], x[4:], y[:4], y[4:]
    return np.concatenate([quat_mul(r1, r2) + quat_mul(d1, d2), quat_mul(r1, d2) + quat_mul(d1, r2)])


FLIP = np.array([1.0] + [-1.0] * 7)


def k_mul(x, y, lam):
    """Negative orientation coordinates are the positive ones with the seven
    non-scalar entries negated."""
    if lam == 1:
        return k_mul_positive(x, y)
    return FLIP * k_mul_positive(FLIP * x, FLIP * y)


def charpoly_roots(m):
    """Eigenvalues of a Hermitian matrix via Faddeev-LeVerrier coefficients
    and mpmath's polynomial root finder; no LAPACK involved."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    coeffs = [mpmath.mpc(1)]
    mk = np.zeros_like(m)
    eye = np.eye(n, dtype=complex)
    c = 1.0 + 0j
    for k in range(1, n + 1):
        mk = m @ (mk + c * eye)
        c = -np.trace(mk) / k
        coeffs.append(mpmath.mpc(c.real, c.imag))
    roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=60)
    return np.sort(np.array([float(mpmath.re(r)) for r in roots]))


def ks_uniform(samples, lo=-1.0, hi=1.0):
    x = np.sort((np.asarray(samples) - lo) / (hi - lo))
    n = len(x)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - x), np.max(x - (i - 1) / n)))
