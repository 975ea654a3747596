"""Named verification campaigns.  Each one fills a :class:`Report` with checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bell_sim, chsh
from . import even_algebra as ka
from . import multivector as mv
from .jacobi import hermitian_eigh
from .report import Report
from .vectors import UnitVector3, X_HAT, Y_HAT, Z_HAT, sample_unit_vector

COMMANDS = ("verify-algebra", "verify-norms", "counterexample", "simulate-singlet", "chsh", "all")
MACHINE_TOL = 8 * np.finfo(float).eps


@dataclass
class RunConfig:
    command: str
    seed: int = 1
    trials: int = 100_000
    pairs: int = 20
    tolerance: float = 1e-10
    format: str = "json"
    output: str | None = None
    workers: int = 1
    trials_csv: str | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.trials < 1:
            raise ValueError("--trials must be at least 1")
        if self.pairs < 1:
            raise ValueError("--pairs must be at least 1")
        if not self.tolerance > 0:
            raise ValueError("--tolerance must be positive")
        if self.format not in ("json", "csv"):
            raise ValueError("--format must be json or csv")
        if self.seed < 0:
            raise ValueError("--seed must be non-negative")
        if self.workers < 1:
            raise ValueError("--workers must be at least 1")

    def parameters(self) -> dict:
        return {"trials": self.trials, "pairs": self.pairs, "tolerance": self.tolerance, "format": self.format}


def campaign_rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(1 << 20, stream))))


def random_k_coords(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal((n, 8))


def zero_defect_coords(rng: np.random.Generator, n: int, lam: int = 1) -> np.ndarray:
    """Random coordinates with vanishing orthogonality defect.

    The defect is ``2 <w, q_d>`` with ``w = (g, lam u)``, so projecting
    ``q_d`` off ``w`` zeroes it.
    """
    x = random_k_coords(rng, n)
    w = x[:, :4].copy()
    w[:, 1:] *= lam
    x[:, 4:] -= (np.sum(w * x[:, 4:], axis=1) / np.sum(w * w, axis=1))[:, None] * w
    return x


# --------------------------------------------------------------------------


def parity_oracle_sign(a: int, b: int) -> tuple[int, int]:
    """Blade product by literally sorting the generator word and cancelling
    equal neighbours; independent of the bitmask rule."""
    word = [i for i in range(4) if a >> i & 1] + [i for i in range(4) if b >> i & 1]
    sign = 1
    for end in range(len(word) - 1, 0, -1):
        for j in range(end):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                sign = -sign
    mask, k = 0, 0
    while k < len(word):
        if k + 1 < len(word) and word[k] == word[k + 1]:
            k += 2
        else:
            mask |= 1 << word[k]
            k += 1
    return mask, sign


def verify_algebra(report: Report, cfg: RunConfig) -> None:
    mismatches = sum(
        (int(mv.PRODUCT_INDEX[a, b]), int(mv.PRODUCT_SIGN[a, b])) != parity_oracle_sign(a, b)
        for a in range(mv.DIM)
        for b in range(mv.DIM)
    )
    report.add("blade table matches parity oracle", "plumbing", mismatches == 0, mismatches, 0)

    rng = campaign_rng(cfg.seed, 0)
    n = min(cfg.trials, 20_000)
    A, B, C = (rng.standard_normal((n, mv.DIM)) for _ in range(3))
    left = mv.product_batch(mv.product_batch(A, B), C)
    right = mv.product_batch(A, mv.product_batch(B, C))
    err = float(np.max(np.abs(left - right) / np.maximum(np.abs(left).max(axis=1, keepdims=True), 1e-300)))
    report.add("associativity (AB)C = A(BC)", "plumbing", err <= 1e-12, err, 0.0, 1e-12)

    rev = mv.REVERSE_SIGN
    lhs = mv.product_batch(A, B) * rev
    rhs = mv.product_batch(B * rev, A * rev)
    err = float(np.max(np.abs(lhs - rhs)))
    report.add("reverse is an anti-automorphism", "reverse of a product", err <= 1e-12, err, 0.0, 1e-12)

    even = A * (mv.GRADES % 2 == 0)
    eps = np.broadcast_to(mv.EPSILON.coeffs, even.shape)
    err = float(np.max(np.abs(mv.product_batch(eps, even) - mv.product_batch(even, eps))))
    report.add("eps commutes with even elements", "eps central in K", err == 0.0, err, 0.0, 0.0)

    recon = sum(mv.grade_projection(mv.Multivector(A[0]), k) for k in range(5))
    report.add("grade decomposition", "plumbing", recon == mv.Multivector(A[0]), 0, 0)

    for label, got, want in (
        ("I3^2 = -1", mv.I3 * mv.I3, -1.0),
        ("eps^2 = +1", mv.EPSILON * mv.EPSILON, 1.0),
        ("reverse(eps) = eps", ~mv.EPSILON, mv.EPSILON),
        # odd blades anticommute with the pseudoscalar in four dimensions
        ("I3 eps = -eps I3", mv.I3 * mv.EPSILON, -(mv.EPSILON * mv.I3)),
    ):
        want = want if isinstance(want, mv.Multivector) else mv.Multivector.scalar(want)
        report.add(label, "pseudoscalar identities", got == want, got.coeffs.tolist(), want.coeffs.tolist())


def verify_norms(report: Report, cfg: RunConfig) -> None:
    tol = cfg.tolerance
    for lam in ka.ORIENTATIONS:
        rng = campaign_rng(cfg.seed, 10 + lam)
        x, y = random_k_coords(rng, cfg.trials), random_k_coords(rng, cfg.trials)
        worst = float(np.max(ka.composition_errors(x, y, lam)))
        report.add(f"composition law, lam={lam:+d}", "composition law ||XY|| = ||X|| ||Y||", worst <= tol, worst, 0.0, tol)

        c, d = ka.quadratic_form_batch(x, lam)
        slack = float(np.min(c - np.abs(d)))
        report.add(f"light cone c >= |d|, lam={lam:+d}", "split-complex quadratic form", slack >= 0.0, slack, ">= 0")

        p, q = ka.hyperbolic_sqrt_batch(c, d)
        err = float(np.max(np.maximum(np.abs(p * p + q * q - c), np.abs(2 * p * q - d)) / c))
        report.add(f"principal root squares back, lam={lam:+d}", "principal positive square root", err <= tol, err, 0.0, tol)

        sn = ka.scalar_norm_batch(x)
        report.add(
            f"positive definiteness, lam={lam:+d}",
            "positive definiteness ||X|| = 0 iff X = 0",
            bool(np.all(sn > 0) and np.all((c != 0) | (d != 0))),
            float(np.min(sn)),
            "> 0",
        )

        zx, zy = zero_defect_coords(rng, cfg.trials, lam), zero_defect_coords(rng, cfg.trials, lam)
        prod = ka.k_product_batch(zx, zy, lam)
        sx, sy, sxy = ka.scalar_norm_batch(zx), ka.scalar_norm_batch(zy), ka.scalar_norm_batch(prod)
        err = float(np.max(np.abs(sxy - sx * sy) / (sx * sy)))
        report.add(f"scalar composition on zero-defect pairs, lam={lam:+d}", "scalar-valued composition law", err <= tol, err, 0.0, tol)

    zero = ka.KElement()
    report.add("zero element has zero norms", "positive definiteness ||X|| = 0 iff X = 0",
               ka.scalar_norm(zero) == 0.0 and ka.quadratic_form(zero) == ka.Hyperbolic(0.0, 0.0), ka.scalar_norm(zero), 0.0)

    det = ka.orientation_determinant()
    report.add("orientation change-of-basis determinant", "orientation determinant (-1)^7", det == -1.0, det, -1.0, 0.0)

    s = math.sqrt(2.0)
    cases = (
        ("unit quaternion on S^7", ka.KElement(ka.Quaternion(0.6, (0.0, 0.8, 0.0))), 1.0, True),
        ("1 + I3 e1 on S^7 of radius sqrt(2)", ka.KElement(ka.Quaternion(1.0), ka.Quaternion(0.0, (1.0, 0.0, 0.0))), s, True),
        ("(1 + eps)/sqrt(2) off S^7", ka.KElement(ka.Quaternion(1 / s), ka.Quaternion(1 / s)), 1.0, False),
    )
    for label, x, radius, want in cases:
        got = ka.is_on_seven_sphere(x, radius, tol)
        report.add(label, "7-sphere in K", got == want, got, want)


def counterexample(report: Report, cfg: RunConfig) -> None:
    X = ka.KElement.epsilon() - 1.0
    Y = ka.KElement.epsilon() + 1.0
    XY = X * Y
    tol = 1e-12
    gx, gy, gxy = ka.geometric_norm(X), ka.geometric_norm(Y), ka.geometric_norm(XY)
    report.add("product (eps-1)(eps+1) vanishes", "counterexample X=eps-1, Y=eps+1",
               bool(np.all(XY.coords() == 0.0)), XY.coords().tolist(), [0.0] * 8)
    report.add("geometric ||eps-1|| = 1 - eps", "geometric norm sqrt(2(1-eps)) = 1-eps",
               gx.isclose(ka.Hyperbolic(1.0, -1.0), tol, tol), gx.as_tuple(), [1.0, -1.0], tol)
    report.add("geometric ||eps+1|| = 1 + eps", "geometric norm sqrt(2(1+eps)) = 1+eps",
               gy.isclose(ka.Hyperbolic(1.0, 1.0), tol, tol), gy.as_tuple(), [1.0, 1.0], tol)
    rhs = gx * gy
    report.add("geometric norms: ||XY|| and ||X|| ||Y||", "(1-eps)(1+eps) = 0",
               gxy.isclose(0.0, tol, tol) and rhs.isclose(0.0, tol, tol),
               [gxy.as_tuple(), rhs.as_tuple()], [[0.0, 0.0], [0.0, 0.0]], tol)
    sx, sy, sxy = ka.scalar_norm(X), ka.scalar_norm(Y), ka.scalar_norm(XY)
    report.add("scalar ||eps-1|| = sqrt(2)", "scalar norm <2(1-eps)>_0 = sqrt(2)",
               abs(sx - math.sqrt(2.0)) <= tol, sx, math.sqrt(2.0), tol)
    report.add("scalar norms: ||XY|| and ||X|| ||Y||", "scalar norm <2(1-eps)>_0 = sqrt(2)",
               abs(sxy) <= tol and abs(sx * sy - 2.0) <= tol, [sxy, sx * sy], [0.0, 2.0], tol)
    report.add("scalar norm breaks composition here", "scalar norm needs zero defect",
               abs(sxy - sx * sy) > tol, sxy - sx * sy, "nonzero")
    dx = ka.orthogonality_defect(X)
    report.add("defect of eps-1", "scalar coefficient of eps", dx == -2.0, dx, -2.0, 0.0)


def simulate_singlet(report: Report, cfg: RunConfig) -> None:
    rng = campaign_rng(cfg.seed, 100)
    bound = 5.0 / math.sqrt(cfg.trials)
    for i in range(cfg.pairs):
        a, b = sample_unit_vector(rng), sample_unit_vector(rng)
        run_seed = int(np.random.SeedSequence(cfg.seed, spawn_key=(2, i)).generate_state(1)[0])
        est = bell_sim.simulate(a, b, cfg.trials, run_seed, workers=cfg.workers)
        if i == 0 and cfg.trials_csv:
            bell_sim.write_trials_csv(cfg.trials_csv, bell_sim.trial_records(a, b, cfg.trials, run_seed))
        ab = a.dot(b)
        err = est.scalar_error
        tol = MACHINE_TOL * max(1.0, abs(ab))
        report.add(f"pair {i}: scalar mean = -a.b", "E = -a.b", abs(err) <= tol,
                   est.scalar_mean, -ab, tol)
        report.add(f"pair {i}: bivector residual", "order switch on lam", est.bivector_residual <= bound,
                   est.bivector_residual, 0.0, bound)
        report.add(f"pair {i}: outcome marginals", "A = lam, B = -lam",
                   abs(est.mean_A) <= bound and est.mean_A == -est.mean_B, [est.mean_A, est.mean_B], [0.0, 0.0], bound)
        report.add(f"pair {i}: (A,B) product moment", "A = lam, B = -lam",
                   est.product_moment == -1.0, est.product_moment, -1.0)


def chsh_campaign(report: Report, cfg: RunConfig) -> None:
    tol = 1e-9
    settings = chsh.tsirelson_settings()
    spectrum = chsh.hermitian_eigenvalues(chsh.chsh_operator(*settings))
    report.add("CHSH spectrum at Tsirelson settings", "bounds +-2 sqrt(2)",
               abs(spectrum[0] + chsh.TSIRELSON) <= tol and abs(spectrum[-1] - chsh.TSIRELSON) <= tol,
               spectrum.tolist(), [-chsh.TSIRELSON, 0.0, 0.0, chsh.TSIRELSON], tol)

    rng = campaign_rng(cfg.seed, 200)
    worst_radius, worst_residual = 0.0, 0.0
    for _ in range(1000):
        quad = [sample_unit_vector(rng) for _ in range(4)]
        op = chsh.chsh_operator(*quad)
        w, v = hermitian_eigh(op)
        worst_radius = max(worst_radius, float(np.max(np.abs(w))))
        worst_residual = max(worst_residual, float(np.max(np.linalg.norm(op @ v - v * w, axis=0))))
    report.add("Tsirelson ceiling over 1000 random settings", "bounds +-2 sqrt(2)",
               worst_radius <= chsh.TSIRELSON + tol, worst_radius, chsh.TSIRELSON, tol)
    report.add("eigenpair residuals", "plumbing", worst_residual <= tol, worst_residual, 0.0, tol)

    values = sorted(set(chsh.boole_bound_enumeration().values()))
    report.add("CHSH combination over all 16 outcome assignments", "Boole bound", values == [-2, 2], values, [-2, 2])

    rep = chsh.eigenvalue_additivity_report(*settings)
    report.add("spectral extremes are not combination values", "eigenvalue of a sum is not the sum of eigenvalues",
               rep.extremes_disjoint and chsh.TSIRELSON not in rep.combination_set,
               {"spectrum": rep.spectrum, "combination_set": rep.combination_set}, "disjoint")

    ss = chsh.spin_sum_spectrum(X_HAT, Y_HAT)
    r2 = math.sqrt(2.0)
    report.add("spectrum of sigma_x + sigma_y", "spin-sum example",
               abs(ss[0] + r2) <= 1e-12 and abs(ss[1] - r2) <= 1e-12 and not any(abs(e - k) < 0.1 for e in ss for k in (-2, 0, 2)),
               ss.tolist(), [-r2, r2], 1e-12)

    worst = 0.0
    for _ in range(cfg.pairs):
        a, b = sample_unit_vector(rng), sample_unit_vector(rng)
        worst = max(worst, abs(chsh.singlet_expectation(a, b) + a.dot(b)))
    report.add("singlet expectation = -a.b", "E = -a.b", worst <= 1e-12, worst, 0.0, 1e-12)

    lambdas = bell_sim.orientations(min(cfg.trials, 10_000), cfg.seed).tolist()
    lin = chsh.expectation_linearity_check(
        lambdas, lambda s, lam: bell_sim.measurement_outcomes(lam)[0],
        lambda s, lam: bell_sim.measurement_outcomes(lam)[1], (X_HAT, Y_HAT, Z_HAT, -Z_HAT))
    report.add("sum of expectations = expectation of sum", "additivity of expectations",
               lin.equal, str(lin.difference), "0")


CAMPAIGNS = {
    "verify-algebra": verify_algebra,
    "verify-norms": verify_norms,
    "counterexample": counterexample,
    "simulate-singlet": simulate_singlet,
    "chsh": chsh_campaign,
}


def run(cfg: RunConfig) -> Report:
    cfg.validate()
    report = Report(cfg.command, cfg.seed, cfg.parameters())
    names = list(CAMPAIGNS) if cfg.command == "all" else [cfg.command]
    for name in names:
        CAMPAIGNS[name](report, cfg)
    return report
