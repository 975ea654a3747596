import csv
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from s7check import bell_sim
from s7check import multivector as mv
from s7check.bell_sim import detector_bivector, measurement_outcomes, simulate, trial_product
from s7check.even_algebra import KElement, embed
from s7check.vectors import UnitVector3, X_HAT, Y_HAT, Z_HAT, sample_unit_vector

from oracles import ks_uniform

MACHINE = 8 * np.finfo(float).eps

units = st.tuples(*[st.floats(-1, 1)] * 3).filter(lambda v: sum(t * t for t in v) > 1e-6).map(UnitVector3.normalized)


def test_unit_vector_validation():
    with pytest.raises(ValueError):
        UnitVector3(1.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        UnitVector3.normalized([0, 0, 0])


def test_detector_bivector_of_x():
    assert embed(detector_bivector(X_HAT)) == mv.E2 * mv.E3


@given(units)
def test_detector_bivector_squares_to_minus_one(a):
    d = detector_bivector(a)
    assert (d * d).isclose(KElement.scalar(-1.0), tol=1e-14)


@given(units, units)
def test_detector_product_scalar_part(a, b):
    q = detector_bivector(a) * detector_bivector(b)
    assert abs(q.q_r.g + a.dot(b)) <= MACHINE


def test_detector_rejects_non_unit():
    with pytest.raises(ValueError):
        detector_bivector((1.0, 1.0, 0.0))


def test_measurement_outcomes():
    assert measurement_outcomes(1) == (1, -1)
    assert measurement_outcomes(-1) == (-1, 1)
    for lam in (1, -1):
        A, B = measurement_outcomes(lam)
        assert A * B == -1
    with pytest.raises(ValueError):
        measurement_outcomes(0)


def test_trial_product_orthogonal_settings():
    q = trial_product(X_HAT, Y_HAT, 1)
    assert embed(q) == (mv.E2 * mv.E3) * (mv.E3 * mv.E1)
    assert q.q_r.g == 0.0


@given(units, st.sampled_from([1, -1]))
def test_trial_product_equal_settings(a, lam):
    q = trial_product(a, a, lam)
    assert q.isclose(KElement.scalar(-1.0), tol=1e-15)


@given(units, units)
def test_trial_product_branches(a, b):
    p, m = trial_product(a, b, 1), trial_product(a, b, -1)
    assert p.q_r.g == m.q_r.g
    assert np.array_equal(p.coords()[1:], -m.coords()[1:])
    s = (p + m).coords()
    assert s[0] == pytest.approx(-2 * a.dot(b), abs=2 * MACHINE)
    assert np.all(s[1:] == 0.0)


def test_simulate_equal_settings():
    a = UnitVector3.normalized([1, 2, 2])
    est = simulate(a, a, 12345, 3)
    assert est.scalar_mean == -1.0
    assert est.bivector_residual == 0.0


def test_simulate_orthogonal_settings():
    n = 10**6
    est = simulate(X_HAT, Y_HAT, n, 7)
    assert est.scalar_mean == 0.0
    assert est.bivector_residual <= 5 / math.sqrt(n)


def test_simulate_half_overlap():
    a = X_HAT
    b = UnitVector3(0.5, math.sqrt(0.75), 0.0)
    for n in (1, 17, 1000):
        assert simulate(a, b, n, 99).scalar_mean == pytest.approx(-0.5, abs=MACHINE)


def test_simulate_rejects_zero_trials():
    with pytest.raises(ValueError):
        simulate(X_HAT, Y_HAT, 0, 1)


@settings(max_examples=30, deadline=None)
@given(units, units, st.integers(1, 5000), st.integers(0, 2**32))
def test_scalar_correlator_exact(a, b, n, seed):
    est = simulate(a, b, n, seed)
    assert abs(est.scalar_error) <= MACHINE * max(1.0, abs(a.dot(b)))
    assert est.bivector_residual >= 0.0
    assert est.product_moment == -1.0


def test_matches_explicit_average_of_trials():
    a, b = UnitVector3.normalized([1, -1, 0.3]), UnitVector3.normalized([0.2, 1, 1])
    n, seed = 3000, 5
    recs = bell_sim.trial_records(a, b, n, seed, shard_size=256)
    mean_q = np.mean([r.q.coords() for r in recs], axis=0)
    est = simulate(a, b, n, seed, shard_size=256)
    assert np.allclose(est.mean_quaternion, mean_q, atol=1e-13)
    assert np.linalg.norm(mean_q[1:]) == pytest.approx(est.bivector_residual, abs=1e-13)
    assert all(r.A == r.lam and r.B == -r.lam for r in recs)
    assert est.mean_A == pytest.approx(np.mean([r.A for r in recs]), abs=1e-15)


def test_determinism_and_worker_independence():
    a, b = UnitVector3.normalized([1, 2, 3]), UnitVector3.normalized([3, -1, 0])
    first = simulate(a, b, 300_001, 42)
    assert simulate(a, b, 300_001, 42) == first
    assert simulate(a, b, 300_001, 42, workers=4) == first
    assert simulate(a, b, 300_001, 43) != first


def test_shards_are_independent_streams():
    s0 = bell_sim.draw_orientations(1, 0, 1000)
    s1 = bell_sim.draw_orientations(1, 1, 1000)
    assert not np.array_equal(s0, s1)
    assert np.array_equal(s0, bell_sim.draw_orientations(1, 0, 1000))


def test_orientation_coin_is_fair():
    lam = bell_sim.orientations(10**6, 11)
    assert set(np.unique(lam)) == {-1, 1}
    assert abs(lam.mean()) <= 5 / math.sqrt(lam.size)


def test_outcome_marginals():
    n = 200_000
    est = simulate(Z_HAT, X_HAT, n, 21)
    assert abs(est.mean_A) <= 5 / math.sqrt(n)
    assert est.mean_B == -est.mean_A


def test_stderr_tracks_residual_scale():
    a, b = X_HAT, Y_HAT
    n = 10_000
    res = [simulate(a, b, n, s).bivector_residual for s in range(200)]
    se = simulate(a, b, n, 0).stderr
    # residual is |N(0, se)|, mean sqrt(2/pi) se
    assert np.mean(res) == pytest.approx(math.sqrt(2 / math.pi) * se, rel=0.15)


def test_residual_decay_rate():
    a, b = UnitVector3.normalized([1, 0, 1]), UnitVector3.normalized([0, 1, -0.5])
    n = 20_000
    small = np.mean([simulate(a, b, n, s).bivector_residual for s in range(50)])
    large = np.mean([simulate(a, b, 4 * n, 1000 + s).bivector_residual for s in range(50)])
    assert 1.5 <= small / large <= 2.5


def test_sample_unit_vector_norm_and_mean():
    rng = np.random.default_rng(17)
    vs = np.array([sample_unit_vector(rng).as_array() for _ in range(100_000)])
    assert np.max(np.abs(np.linalg.norm(vs, axis=1) - 1.0)) <= 1e-12
    assert np.all(np.abs(vs.mean(axis=0)) <= 0.02)


def test_sample_unit_vector_uniform_cosines():
    rng = np.random.default_rng(18)
    z = np.array([sample_unit_vector(rng).z for _ in range(100_000)])
    assert ks_uniform(z) < 0.01


def test_trial_csv(tmp_path):
    a, b = X_HAT, UnitVector3.normalized([1, 1, 0])
    recs = bell_sim.trial_records(a, b, 25, 4)
    path = tmp_path / "trials.csv"
    bell_sim.write_trials_csv(path, recs)
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["trial", "lambda", "A", "B"] + [f"q{i}" for i in range(8)]
    assert len(rows) == 26
    for row, rec in zip(rows[1:], recs):
        assert int(row[1]) == rec.lam and int(row[2]) == rec.A and int(row[3]) == rec.B
        assert np.array_equal(np.array(row[4:], dtype=float), rec.q.coords())
