import math

import numpy as np
import pytest

from gerstnerflow import (
    ConvergenceError,
    LabelGrid,
    LabelPoint,
    OutOfDomainError,
    PhysicalPoint,
    WaveField,
    certify_boundary,
    certify_euler_compatibility,
    certify_incompressibility,
    certify_injectivity,
    certify_inversion,
    certify_jacobian,
    certify_kinematic_bc,
    decay_offset,
    flow_map,
    invert_map,
    jacobian_det,
    run_certificates,
    solve_r0_of_s,
    surface_height,
    surface_slope_bound,
    velocity_divergence,
)


@pytest.fixture(scope="module")
def wave():
    return WaveField.build(0.01, -1.0)


@pytest.fixture(scope="module")
def grid(wave):
    return LabelGrid.default(wave)


@pytest.fixture(scope="module")
def report(wave, grid):
    return run_certificates(wave, grid, pair_count=20_000,
                            inversion_samples=500)


def test_grid_shapes_and_ordering(wave, grid):
    q, r, s = grid.axes(wave)
    assert len(q) == 24 and len(r) == 12 and len(s) == 13
    assert q[0] == 0.0 and q[-1] == pytest.approx(wave.L)
    assert r[-1] == wave.r0 and r[0] == wave.r0 - 300.0
    pts = grid.points(wave)
    assert pts.q.shape == (24 * 12 * 13,)
    # q varies fastest
    assert pts.q[1] != pts.q[0]
    assert pts.r[1] == pts.r[0] and pts.s[1] == pts.s[0]


def test_grid_validation(wave):
    with pytest.raises(ValueError):
        LabelGrid(q_count=1, r_count=12, s_count=13, r_min=-10, s_max=1e6)
    bad = LabelGrid(q_count=4, r_count=4, s_count=3, r_min=0.5, s_max=1e6)
    with pytest.raises(ValueError):
        bad.axes(wave)


def test_jacobian_certificate(wave, grid):
    min_det, max_err = certify_jacobian(grid, wave)
    # closed-form minimum over the grid sits at (r=r0, s=0)
    expected = 1.0 - math.exp(2.0 * wave.k * wave.r0)
    assert min_det == pytest.approx(expected, rel=1e-12)
    assert 0.0 < min_det < 1.0
    assert max_err < 1e-6


def test_jacobian_det_vanishes_exactly_at_degenerate_surface():
    w = WaveField.build(0.01, 0.0)
    assert jacobian_det(LabelPoint(q=0.0, r=0.0, s=0.0), w) == 0.0
    # strictly positive below the surface even in the cusp configuration
    assert jacobian_det(LabelPoint(q=0.0, r=-1e-6, s=0.0), w) > 0.0


def test_injectivity_sweep(wave, grid):
    c_op, c_2k, min_ratio, viol_op, viol_2k = certify_injectivity(
        grid, wave, pair_count=50_000, seed=3)
    assert c_op == pytest.approx(math.exp(wave.k * wave.r0))
    assert c_2k == pytest.approx(math.exp(2.0 * wave.k * wave.r0))
    assert viol_op == 0
    assert 0.0 < min_ratio
    # deep pairs are almost isometric: the map tends to the identity
    rng = np.random.default_rng(0)
    q1, q2 = rng.uniform(0, wave.L, (2, 100))
    r1, r2 = rng.uniform(-280.0, -250.0, (2, 100))
    p1 = flow_map(LabelPoint(q=q1, r=r1, s=0.0), 0.0, wave)
    p2 = flow_map(LabelPoint(q=q2, r=r2, s=0.0), 0.0, wave)
    ratio = np.hypot(p1.x - p2.x, p1.z - p2.z) / np.hypot(q1 - q2, r1 - r2)
    # singular values of the planar Jacobian lie in [1 - e, 1 + e] with
    # e = exp(k r); at r <= -250 that is under 0.083
    assert np.all(np.abs(ratio - 1.0) < math.exp(wave.k * -250.0) + 1e-12)


def test_invert_map_roundtrip(wave):
    for (q, r, s) in [(10.0, -5.0, 0.0), (300.0, -15.0, 2e5),
                      (0.0, -50.0, -1e6), (620.0, -5.0, 5e4)]:
        assert r < solve_r0_of_s(s, wave)
        p = flow_map(LabelPoint(q=q, r=r, s=s), 7.0, wave)
        res = invert_map(p, 7.0, wave)
        assert res.label.q == pytest.approx(q, abs=1e-9)
        assert res.label.r == pytest.approx(r, abs=1e-9)
        assert res.label.s == s
        assert res.residual_m <= 1e-12


def test_invert_map_deep_point_is_near_identity(wave):
    p = PhysicalPoint(x=100.0, y=0.0, z=-250.0)
    res = invert_map(p, 0.0, wave)
    # label offset is at most the orbit radius exp(k r)/k (about 8.2 m here)
    amp = math.exp(wave.k * -250.0) / wave.k
    assert res.label.q == pytest.approx(100.0, abs=amp)
    assert res.label.r == pytest.approx(-250.0, abs=amp)
    assert res.iterations < 25


def test_invert_map_rejects_points_above_surface(wave):
    crest = wave.r0 + math.exp(wave.k * wave.r0) / wave.k
    with pytest.raises(OutOfDomainError):
        invert_map(PhysicalPoint(x=0.0, y=0.0, z=crest + 1.0), 0.0, wave)


def test_invert_map_iteration_cap(wave):
    p = flow_map(LabelPoint(q=10.0, r=-1.1, s=0.0), 0.0, wave)
    with pytest.raises(ConvergenceError):
        invert_map(p, 0.0, wave, max_iter=3)


def test_certify_inversion_bounds(wave, grid):
    err, measured, excess = certify_inversion(grid, wave, sample_count=300,
                                              seed=5)
    assert err <= 1e-10
    assert measured < 1.0
    assert excess <= 1e-3


def test_incompressibility(wave, grid):
    assert certify_incompressibility(grid, wave) <= 1e-12


def test_velocity_divergence_small(wave):
    pts = LabelPoint(q=np.linspace(0, wave.L, 12),
                     r=np.linspace(-200.0, wave.r0, 12),
                     s=np.linspace(-1e6, 1e6, 12))
    div = velocity_divergence(pts, 3.0, wave)
    assert np.max(np.abs(div)) <= 1e-6


def test_euler_compatibility_baseline_and_corruption(wave, grid):
    asym = certify_euler_compatibility(grid, wave)
    assert asym <= 1e-6 * wave.c ** 2 * wave.k * 1000.0
    assert asym <= 1e-8 * wave.c ** 2 * wave.k * 1000.0  # pass-flag threshold
    bad = WaveField(constants=wave.constants, k=wave.k, c=1.01 * wave.c,
                    r0=wave.r0, L=wave.L)
    corrupted = certify_euler_compatibility(grid, bad)
    assert corrupted > 10.0 * asym
    assert corrupted > 1e-8 * wave.c ** 2 * wave.k * 1000.0


def test_euler_compatibility_richardson(wave, grid):
    # central differences: halving the step cuts the defect ~4x
    a_h = certify_euler_compatibility(grid, wave, fd_step=0.01)
    a_h2 = certify_euler_compatibility(grid, wave, fd_step=0.005)
    assert a_h / a_h2 == pytest.approx(4.0, rel=0.6)


def test_boundary_flags(wave):
    flags = certify_boundary(wave)
    assert flags == {"q_planes": True, "below_crest": True,
                     "surface_sheet": True, "all": True}


def test_kinematic_bc(wave):
    err = certify_kinematic_bc(wave)
    assert err <= 10.0 * 1e-12 * surface_slope_bound(wave)


def test_interior_particles_stay_strictly_below_surface(wave):
    rng = np.random.default_rng(11)
    for _ in range(50):
        s = float(rng.uniform(-1e6, 1e6))
        r0s = solve_r0_of_s(s, wave)
        q = float(rng.uniform(0, wave.L))
        r = float(rng.uniform(-200.0, r0s - 0.01))
        t = float(rng.uniform(0, wave.period()))
        p = flow_map(LabelPoint(q=q, r=r, s=s), t, wave)
        eta = surface_height(float(p.x), s, t, wave)
        assert float(p.z) < eta


def test_no_collision_witness_over_time(wave):
    # distinct labels at a common latitude stay separated for all sampled t
    rng = np.random.default_rng(4)
    n = 200
    s = rng.uniform(-1e6, 1e6, n)
    q1, q2 = rng.uniform(0, wave.L, (2, n))
    r1, r2 = rng.uniform(-300.0, wave.r0, (2, n))
    f = decay_offset(s, wave)
    floor = (1.0 - np.exp(wave.k * (np.maximum(r1, r2) - f))) \
        * np.hypot(q1 - q2, r1 - r2)
    for t in np.linspace(0.0, wave.period(), 7):
        p1 = flow_map(LabelPoint(q=q1, r=r1, s=s), float(t), wave)
        p2 = flow_map(LabelPoint(q=q2, r=r2, s=s), float(t), wave)
        d = np.hypot(p1.x - p2.x, p1.z - p2.z)
        assert np.all(d >= floor - 1e-9)


def test_run_certificates_passes_at_reference_configuration(report):
    assert report.passed
    assert report.min_jacobian_det > 0.0
    assert report.max_fd_jacobian_error <= 1e-6
    assert report.max_inversion_roundtrip_error <= 1e-10
    assert report.max_det_time_variation <= 1e-12
    assert report.boundary_checks_passed


def test_run_certificates_fails_in_degenerate_configuration():
    w = WaveField.build(0.01, 0.0)
    rep = run_certificates(w, pair_count=1000, inversion_samples=10)
    assert not rep.passed
    assert rep.min_jacobian_det == pytest.approx(0.0, abs=1e-15)


def test_run_certificates_near_degenerate_still_passes():
    w = WaveField.build(0.01, -1e-6)
    rep = run_certificates(w, pair_count=20_000, inversion_samples=300)
    assert rep.passed
    assert 0.0 < rep.min_jacobian_det < 1e-6


def test_report_grid_summary(report, wave, grid):
    assert report.grid == grid.summary(wave)
    assert report.grid["q_count"] == 24
