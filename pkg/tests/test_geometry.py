import math

import numpy as np
import pytest
from scipy import integrate, stats

from gatediscrim import (
    DimensionError,
    Gate,
    GateSU2Params,
    TangentIncrement,
    ValidationError,
    avg_fidelity_mc,
    avg_fidelity_su2_closed,
    gate_distance,
    gate_fidelity_su2,
    haar_sample_su2,
    metric_form_coords,
    metric_form_matrix,
    overlap_samples,
    sphere_embed,
    su2_from_params,
    su2_tangent,
)
from helpers import haar_unitary


def rand_point_tangent(rng, margin=0.05):
    p = GateSU2Params(
        float(rng.uniform(margin, math.pi / 2 - margin)),
        float(rng.uniform(margin, 2 * math.pi - margin)),
        float(rng.uniform(margin, 2 * math.pi - margin)),
    )
    t = TangentIncrement(*rng.standard_normal(3))
    return p, t


def test_metric_forms_agree():
    rng = np.random.default_rng(31)
    for _ in range(100):
        p, t = rand_point_tangent(rng)
        via_matrix = metric_form_matrix(su2_from_params(p), su2_tangent(p, t))
        via_coords = metric_form_coords(p, t)
        assert abs(via_matrix - via_coords) <= 1e-9 * max(1.0, via_coords)


def test_metric_matrix_warns_on_non_tangent():
    with pytest.warns(UserWarning):
        metric_form_matrix(Gate.identity(2), np.array([[1.0, 0.0], [0.0, 1.0]]))


def test_metric_matrix_validation():
    with pytest.raises(DimensionError):
        metric_form_matrix(Gate.identity(3), np.eye(3))
    with pytest.raises(DimensionError):
        metric_form_matrix(Gate.identity(2), np.eye(3))


def test_distance_squared_matches_metric_locally():
    # d(U(p), U(p + eps t))^2 / (eps^2 g(t)) -> 1
    rng = np.random.default_rng(32)
    for _ in range(25):
        p, t = rand_point_tangent(rng, margin=0.2)
        g = metric_form_coords(p, t)
        if g < 0.05:
            continue
        for eps, bound in [(1e-3, 1e-2), (1e-4, 1e-3)]:
            moved = GateSU2Params(
                p.theta1 + eps * t.dtheta1,
                p.theta2 + eps * t.dtheta2,
                p.theta3 + eps * t.dtheta3,
            )
            d = gate_distance(su2_from_params(p), su2_from_params(moved))
            ratio = d * d / (eps * eps * g)
            assert abs(ratio - 1.0) <= bound


def test_sphere_embedding_is_isometric():
    # Euclidean motion of the embedded point matches the coordinate metric
    rng = np.random.default_rng(33)
    eps = 1e-5
    for _ in range(50):
        p, t = rand_point_tangent(rng, margin=0.1)
        plus = GateSU2Params(
            p.theta1 + eps * t.dtheta1,
            p.theta2 + eps * t.dtheta2,
            p.theta3 + eps * t.dtheta3,
        )
        minus = GateSU2Params(
            p.theta1 - eps * t.dtheta1,
            p.theta2 - eps * t.dtheta2,
            p.theta3 - eps * t.dtheta3,
        )
        dx = (
            sphere_embed(su2_from_params(plus)).as_array()
            - sphere_embed(su2_from_params(minus)).as_array()
        ) / (2 * eps)
        g = metric_form_coords(p, t)
        assert abs(float(dx @ dx) - g) <= 1e-9 * max(1.0, g)


def test_sphere_embed_validation():
    with pytest.raises(ValidationError):
        sphere_embed(Gate(np.diag([1.0, -1.0])))  # det -1
    with pytest.raises(DimensionError):
        sphere_embed(Gate.identity(3))
    pt = sphere_embed(Gate.identity(2))
    assert np.allclose(pt.as_array(), [1, 0, 0, 0])


def test_haar_sample_ranges_and_determinism():
    params = haar_sample_su2(7, 500)
    assert len(params) == 500
    for p in params:
        assert 0.0 <= p.theta1 <= math.pi / 2
        assert 0.0 <= p.theta2 < 2 * math.pi
        assert 0.0 <= p.theta3 < 2 * math.pi
    again = haar_sample_su2(7, 500)
    assert all(a == b for a, b in zip(params, again))
    with pytest.raises(ValidationError):
        haar_sample_su2(7, 0)


def test_haar_theta1_marginal():
    # inverse-transform construction: theta1 ~ sin(2 theta1) d theta1,
    # i.e. CDF sin^2
    t1 = np.array([p.theta1 for p in haar_sample_su2(11, 100_000)])
    ks = stats.kstest(t1, lambda x: np.sin(x) ** 2)
    assert ks.statistic <= 0.01


def test_haar_left_invariance_of_fidelity_distribution():
    # the fidelity to ANY fixed gate is identically distributed
    n = 100_000
    rng = np.random.default_rng(34)
    v1 = Gate(haar_unitary(2, rng, special=True))
    v2 = Gate(haar_unitary(2, rng, special=True))

    def fids(v: Gate, seed: int) -> np.ndarray:
        params = haar_sample_su2(seed, n)
        t1 = np.array([p.theta1 for p in params])
        t2 = np.array([p.theta2 for p in params])
        t3 = np.array([p.theta3 for p in params])
        u11 = np.cos(t1) * np.exp(1j * t2)
        u12 = np.sin(t1) * np.exp(1j * t3)
        m = v.matrix.conj()
        tr = m[0, 0] * u11 + m[1, 0] * (-np.conj(u12)) + m[0, 1] * u12 + m[1, 1] * np.conj(u11)
        return np.abs(tr) ** 2 / 4.0

    ks = stats.ks_2samp(fids(v1, 35), fids(v2, 36))
    assert ks.statistic <= 0.02


def test_avg_fidelity_closed_form_cases():
    u = Gate.identity(2)
    assert abs(avg_fidelity_su2_closed(u, u) - 1.0) <= 1e-12
    sx = Gate(1j * np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert abs(avg_fidelity_su2_closed(u, sx) - 1.0 / 3.0) <= 1e-12


def test_avg_fidelity_mc_matches_closed_form():
    rng = np.random.default_rng(37)
    for k in range(10):
        u1 = Gate(haar_unitary(2, rng, special=True))
        u2 = Gate(haar_unitary(2, rng, special=True))
        est = avg_fidelity_mc(u1, u2, samples=40_000, seed=200 + k)
        expect = avg_fidelity_su2_closed(u1, u2)
        assert abs(est.estimate - expect) <= 4 * est.stderr
        assert est.samples == 40_000


def test_avg_fidelity_mc_higher_dimensions():
    # for any d the uniform average of |<psi|V|psi>|^2 is
    # (d + |tr V|^2) / (d (d+1))
    rng = np.random.default_rng(38)
    u1 = Gate(haar_unitary(3, rng, special=True))
    u2 = Gate(haar_unitary(3, rng, special=True))
    v = u1.matrix.conj().T @ u2.matrix
    d = 3
    expect = (d + abs(np.trace(v)) ** 2) / (d * (d + 1))
    est = avg_fidelity_mc(u1, u2, samples=60_000, seed=39)
    assert abs(est.estimate - expect) <= 4 * est.stderr


def test_avg_fidelity_mc_error_scaling():
    u1 = Gate.identity(2)
    u2 = Gate(1j * np.array([[0.0, 1.0], [1.0, 0.0]]))
    lo = avg_fidelity_mc(u1, u2, samples=10_000, seed=40)
    hi = avg_fidelity_mc(u1, u2, samples=1_000_000, seed=41)
    ratio = lo.stderr / hi.stderr
    assert abs(ratio - 10.0) <= 2.0  # within 20%


def test_avg_fidelity_mc_determinism_and_validation():
    u1 = Gate.identity(2)
    u2 = Gate(np.diag([1j, -1j]))
    a = avg_fidelity_mc(u1, u2, samples=1000, seed=5)
    b = avg_fidelity_mc(u1, u2, samples=1000, seed=5)
    assert a == b
    with pytest.raises(ValidationError):
        avg_fidelity_mc(u1, u2, samples=0, seed=5)
    with pytest.raises(DimensionError):
        avg_fidelity_mc(u1, Gate.identity(3), samples=10, seed=5)


def test_overlap_samples_match_pointwise_formula():
    u1 = Gate.identity(2)
    u2 = Gate(np.diag([np.exp(0.4j), np.exp(-0.4j)]))
    vals = overlap_samples(u1, u2, samples=2000, seed=6)
    assert vals.shape == (2000,)
    assert vals.min() >= 0.0 and vals.max() <= 1.0 + 1e-12
    # against the closed-form average
    expect = avg_fidelity_su2_closed(u1, u2)
    assert abs(vals.mean() - expect) <= 0.02


def test_mean_trace_squared_is_one():
    # Monte-Carlo mean of |tr U|^2 under the invariant measure vs quadrature
    params = haar_sample_su2(42, 100_000)
    t1 = np.array([p.theta1 for p in params])
    t2 = np.array([p.theta2 for p in params])
    mc = np.mean(4.0 * np.cos(t1) ** 2 * np.cos(t2) ** 2)

    ref, _ = integrate.dblquad(
        lambda t2_, t1_: 4.0
        * math.cos(t1_) ** 2
        * math.cos(t2_) ** 2
        * math.sin(2.0 * t1_)
        / (2.0 * math.pi),
        0.0,
        math.pi / 2,
        0.0,
        2.0 * math.pi,
    )
    assert abs(ref - 1.0) <= 1e-9
    assert abs(mc - ref) <= 0.02
