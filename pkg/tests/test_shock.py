from hypothesis import given, settings
from hypothesis import strategies as st
import numpy as np
import pytest
from scipy import optimize
from scipy.spatial.transform import Rotation

from rhkit.eos import StiffenedGas
from rhkit.errors import (
    ContactSurfaceError,
    EnthalpyUnreachableError,
    ExpansionShockRejectedError,
    NotSupersonicError,
    RatioOutOfRangeError,
    RootNotBracketedError,
)
from rhkit.kinematics import SurfaceFrame
from rhkit.shock import (
    DownDensity,
    DownPressure,
    Mach,
    ShockPair,
    ShockSolver,
    construct_crh2_pair,
    contact_conditions,
    crh2_sweep,
    det_jump_identity,
    disFF_residual,
    hugoniot_locus,
    lax_admissible,
    perturbed_pairs,
    random_admissible_shocks,
    rank_one_det_residual,
    reference_surface_term,
    rh_residuals,
    solve_downstream,
    spacetime_surface_term,
    variation_jump,
)
from rhkit.shock.roots import bisect_newton, find_upper_bracket
from rhkit.tensors import FluidState


@pytest.fixture(scope="module")
def shock_ensemble():
    return random_admissible_shocks(seed=0, count=1000)


@pytest.fixture
def mach2_pair(mach2_upstream, ideal_gas, x_frame):
    return solve_downstream(mach2_upstream, ideal_gas, x_frame, Mach(2.0))


def _mach2_density_ratio(gamma=1.4, mach=2.0):
    """Independent oracle: energy condition in the density ratio, solved by brentq."""
    p1, rho1 = 1.0, 1.0
    u1 = mach * np.sqrt(gamma * p1 / rho1)
    h1 = gamma / (gamma - 1.0) * p1 / rho1

    def energy(ratio):
        p2 = p1 + rho1 * u1**2 * (1.0 - 1.0 / ratio)
        h2 = gamma / (gamma - 1.0) * p2 / (rho1 * ratio)
        return h2 - h1 - 0.5 * u1**2 * (1.0 - 1.0 / ratio**2)

    return optimize.brentq(energy, 1.5, 5.9, xtol=1e-15, rtol=4 * np.finfo(float).eps)


# ====================================================
# DOWNSTREAM SOLVER
# ====================================================


def test_mach2_shock_matches_oracles(mach2_pair, ideal_gas):
    rho2 = mach2_pair.down.rho
    assert rho2 == pytest.approx(_mach2_density_ratio(), rel=1e-10)
    assert rho2 == pytest.approx(8.0 / 3.0, rel=1e-10)
    assert mach2_pair.down.pressure(ideal_gas) == pytest.approx(4.5, rel=1e-10)
    assert mach2_pair.frame.D_n == pytest.approx(0.0, abs=1e-12)
    assert mach2_pair.u_down / mach2_pair.down.sound_speed(ideal_gas) == pytest.approx(
        np.sqrt(1.0 / 3.0), rel=1e-10
    )
    assert rh_residuals(mach2_pair, ideal_gas).norm() < 1e-12


def test_strength_parametrizations_agree(mach2_upstream, ideal_gas, x_frame):
    by_pressure = solve_downstream(mach2_upstream, ideal_gas, x_frame, DownPressure(4.5))
    by_density = solve_downstream(mach2_upstream, ideal_gas, x_frame, DownDensity(8.0 / 3.0))
    assert by_pressure.down.rho == pytest.approx(8.0 / 3.0, rel=1e-10)
    assert by_density.down.pressure(ideal_gas) == pytest.approx(4.5, rel=1e-10)
    assert by_pressure.u_up == pytest.approx(2.0 * np.sqrt(1.4), rel=1e-10)


def test_strength_errors(mach2_upstream, ideal_gas, x_frame):
    solver = ShockSolver(ideal_gas)
    with pytest.raises(NotSupersonicError):
        solver.solve_downstream(mach2_upstream, x_frame, Mach(0.5))
    with pytest.raises(ExpansionShockRejectedError):
        solver.solve_downstream(mach2_upstream, x_frame, DownPressure(0.5))
    with pytest.raises(ExpansionShockRejectedError):
        solver.solve_downstream(mach2_upstream, x_frame, DownDensity(0.5))
    with pytest.raises(RatioOutOfRangeError):
        solver.solve_downstream(mach2_upstream, x_frame, DownDensity(7.0))


def test_zero_strength_is_not_a_shock(mach2_upstream, ideal_gas, x_frame):
    p1 = mach2_upstream.pressure(ideal_gas)
    pair = solve_downstream(mach2_upstream, ideal_gas, x_frame, DownPressure(p1))
    assert pair.down is pair.up
    assert pair.u_up == pytest.approx(np.sqrt(1.4))
    report = lax_admissible(pair, ideal_gas)
    assert not report.is_shock
    assert not report.admissible


def test_stiffened_gas_shock():
    eos = StiffenedGas(gamma=4.4, p_inf=6.0)
    up = FluidState.from_pressure(1.0, [0.0, 0.0, 0.0], 1.0, eos)
    pair = solve_downstream(up, eos, SurfaceFrame(n=[0.0, 0.0, 1.0]), Mach(3.0))
    assert rh_residuals(pair, eos).norm() < 1e-10
    assert np.linalg.norm(spacetime_surface_term(pair, eos)) < 1e-10
    assert lax_admissible(pair, eos).admissible
    assert pair.down.s > pair.up.s


def test_hugoniot_locus(mach2_upstream, ideal_gas, x_frame):
    points = hugoniot_locus(mach2_upstream, ideal_gas, x_frame, [1.5, 2.0, 8.0 / 3.0, 4.0])
    assert points[2].p2 == pytest.approx(4.5, rel=1e-10)
    assert points[2].D_n == pytest.approx(0.0, abs=1e-12)
    assert all(a.p2 < b.p2 for a, b in zip(points, points[1:]))
    assert all(a.s2 < b.s2 for a, b in zip(points, points[1:]))
    with pytest.raises(RatioOutOfRangeError):
        hugoniot_locus(mach2_upstream, ideal_gas, x_frame, [6.5])


def test_weak_shock_limit(mach2_upstream, ideal_gas, x_frame):
    pair = solve_downstream(mach2_upstream, ideal_gas, x_frame, Mach(1.0 + 1e-6))
    c1 = mach2_upstream.sound_speed(ideal_gas)
    p1 = mach2_upstream.pressure(ideal_gas)
    jumps = [
        pair.down.rho / pair.up.rho - 1.0,
        pair.down.pressure(ideal_gas) / p1 - 1.0,
        np.linalg.norm(pair.velocity_jump) / c1,
        pair.down.s - pair.up.s,
    ]
    assert np.linalg.norm(jumps) < 1e-4
    assert pair.down.rho > pair.up.rho


def test_tangential_velocity_is_continuous(ideal_gas):
    frame = SurfaceFrame.from_direction([1.0, 2.0, -2.0])
    tangential = np.array([0.8, -0.1, 0.3])
    up = FluidState.from_pressure(1.0, tangential - 0.25 * frame.n, 1.0, ideal_gas)
    pair = ShockSolver(ideal_gas).solve_downstream(up, frame, Mach(3.0))
    np.testing.assert_allclose(
        frame.tangential(pair.down.v), frame.tangential(pair.up.v), rtol=0, atol=1e-14
    )


def test_tangential_continuity_on_random_shocks(shock_ensemble):
    for _, pair in shock_ensemble:
        scale = max(1.0, np.linalg.norm(pair.up.v), np.linalg.norm(pair.velocity_jump))
        gap = pair.frame.tangential(pair.down.v) - pair.frame.tangential(pair.up.v)
        assert np.max(np.abs(gap)) < 1e-14 * scale


def test_hugoniot_locus_asymptotics(mach2_upstream, ideal_gas, x_frame):
    p1 = mach2_upstream.pressure(ideal_gas)

    def closed_form(X, gamma=1.4):
        return ((gamma + 1.0) * X - (gamma - 1.0)) / ((gamma + 1.0) - (gamma - 1.0) * X)

    weak = [1.0 + 10.0**-k for k in range(2, 7)]
    points = hugoniot_locus(mach2_upstream, ideal_gas, x_frame, weak)
    excess = [point.p2 / p1 - 1.0 for point in points]
    assert all(a > b > 0.0 for a, b in zip(excess, excess[1:]))
    for X, value in zip(weak, excess):
        # slope of the locus at the upstream point is gamma
        assert value < 2.0 * (X - 1.0)

    strong = [5.9, 5.99, 5.999]
    points = hugoniot_locus(mach2_upstream, ideal_gas, x_frame, strong)
    ratios = [point.p2 / p1 for point in points]
    assert ratios[0] > 100.0
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    for X, ratio in zip(strong, ratios):
        assert ratio == pytest.approx(closed_form(X), rel=1e-8)


# ====================================================
# SPACE-TIME VARIATION RECOVERS THE FULL JUMP SET
# ====================================================


def test_random_shocks_have_vanishing_surface_term(shock_ensemble):
    assert len(shock_ensemble) == 1000
    for eos, pair in shock_ensemble:
        assert rh_residuals(pair, eos).norm() < 1e-10
        assert np.linalg.norm(spacetime_surface_term(pair, eos)) < 1e-10
        assert lax_admissible(pair, eos).admissible


def test_perturbed_pairs_are_detected(shock_ensemble):
    for eos, pair in perturbed_pairs(shock_ensemble, seed=1):
        assert np.linalg.norm(spacetime_surface_term(pair, eos)) > 1e-6


def test_random_shocks_are_reproducible():
    first = random_admissible_shocks(seed=3, count=5)
    second = random_admissible_shocks(seed=3, count=5, n_jobs=2)
    for (_, a), (_, b) in zip(first, second):
        assert a.down.rho == b.down.rho
        np.testing.assert_array_equal(a.frame.n, b.frame.n)


def test_surface_term_is_boost_and_rotation_invariant(mach2_pair, ideal_gas):
    boosted = mach2_pair.boosted(0.7)
    assert boosted.u_up == pytest.approx(mach2_pair.u_up, rel=1e-14)
    assert np.linalg.norm(spacetime_surface_term(boosted, ideal_gas)) < 1e-10
    rotation = Rotation.from_euler("zyx", [0.3, -1.1, 2.0]).as_matrix()
    rotated = mach2_pair.rotated(rotation)
    assert rh_residuals(rotated, ideal_gas).norm() < 1e-12
    assert np.linalg.norm(spacetime_surface_term(rotated, ideal_gas)) < 1e-10
    assert max(rotated.closure_residuals().values()) < 1e-12


def test_swapped_pair_is_not_admissible(mach2_pair, ideal_gas):
    report = lax_admissible(mach2_pair.swapped(), ideal_gas)
    assert report.is_shock
    assert not report.admissible
    assert report.reason == "upstream not supersonic"


# ====================================================
# REFERENCE VARIATION MISSES NORMAL MOMENTUM
# ====================================================


def test_counterexample_pair(mach2_upstream, ideal_gas, x_frame):
    pair = construct_crh2_pair(mach2_upstream, ideal_gas, x_frame, rho2=2.0)
    residuals = rh_residuals(pair, ideal_gas)
    assert np.linalg.norm(reference_surface_term(pair, ideal_gas)) < 1e-10
    assert abs(residuals.r_mass) < 1e-12
    assert abs(residuals.r_energy) < 1e-12
    # [p + rho u^2] = 4.8 / X + 1.8 X - 6.6 at X = 2
    assert residuals.r_momentum_n == pytest.approx(-0.6, rel=1e-10)
    assert np.linalg.norm(spacetime_surface_term(pair, ideal_gas)) > 1e-3


def test_counterexample_sweep(mach2_upstream, ideal_gas, x_frame):
    ratios = [X for X in np.linspace(1.05, 5.95, 99) if abs(X - 8.0 / 3.0) >= 0.02]
    pairs = crh2_sweep(mach2_upstream, ideal_gas, x_frame, ratios)
    assert len(pairs) == len(ratios)
    for pair in pairs:
        assert np.linalg.norm(reference_surface_term(pair, ideal_gas)) < 1e-10
        assert np.linalg.norm(spacetime_surface_term(pair, ideal_gas)) > 1e-3


def test_reference_term_gap_over_moderate_ratios(mach2_upstream, ideal_gas, x_frame):
    ratios = [X for X in np.linspace(1.2, 3.0, 100) if abs(X - 8.0 / 3.0) >= 0.02]
    assert len(ratios) >= 97
    for pair in crh2_sweep(mach2_upstream, ideal_gas, x_frame, ratios):
        residuals = rh_residuals(pair, ideal_gas)
        assert np.linalg.norm(reference_surface_term(pair, ideal_gas)) < 1e-10
        assert abs(residuals.r_mass) < 1e-10
        assert np.max(np.abs(residuals.r_vel)) < 1e-10
        assert abs(residuals.r_energy) < 1e-10
        # momentum residual is scaled by p1
        assert abs(residuals.r_momentum_n) > 1e-2
        assert np.linalg.norm(spacetime_surface_term(pair, ideal_gas)) > 1e-3


@pytest.mark.parametrize(
    "ds, du",
    [(1e-3, 0.0), (-1e-3, 0.0), (0.0, 1e-3), (0.0, -1e-3)],
)
def test_reference_term_sees_energy_and_mass_defects(mach2_pair, ideal_gas, ds, du):
    down = mach2_pair.down
    broken = FluidState(
        rho=down.rho, v=down.v + du * mach2_pair.frame.n, s=down.s + ds, omega=down.omega
    )
    pair = ShockPair.from_states(mach2_pair.up, broken, mach2_pair.frame)
    residuals = rh_residuals(pair, ideal_gas)
    assert max(abs(residuals.r_mass), abs(residuals.r_energy)) > 1e-5
    assert np.linalg.norm(reference_surface_term(pair, ideal_gas)) > 1e-6


def test_counterexample_at_the_true_shock(mach2_upstream, ideal_gas, x_frame):
    pair = construct_crh2_pair(mach2_upstream, ideal_gas, x_frame, rho2=8.0 / 3.0)
    assert np.linalg.norm(spacetime_surface_term(pair, ideal_gas)) < 1e-10


def test_counterexample_errors(mach2_upstream, ideal_gas, x_frame):
    with pytest.raises(EnthalpyUnreachableError):
        construct_crh2_pair(mach2_upstream, ideal_gas, x_frame, rho2=0.01)
    comoving = SurfaceFrame(n=[1.0, 0.0, 0.0], D_n=float(mach2_upstream.v[0]))
    with pytest.raises(ContactSurfaceError):
        construct_crh2_pair(mach2_upstream, ideal_gas, comoving, rho2=2.0)


# ====================================================
# GEOMETRIC IDENTITIES AND CLOSURE
# ====================================================


@given(
    K=st.lists(st.floats(min_value=-1.0, max_value=1.0), min_size=3, max_size=3),
    L=st.lists(st.floats(min_value=-1.0, max_value=1.0), min_size=3, max_size=3),
)
@settings(max_examples=500, deadline=None)
def test_rank_one_determinant_lemma(K, L):
    assert rank_one_det_residual(K, L) < 1e-14


def test_det_ratio_equals_velocity_ratio(shock_ensemble):
    for _, pair in shock_ensemble[:200]:
        lemma, ratio = det_jump_identity(
            pair.F_up, pair.velocity_jump, -pair.w, pair.u_up, pair.u_down
        )
        assert lemma < 1e-12
        assert ratio < 1e-12


def test_closure_relations(shock_ensemble):
    for _, pair in shock_ensemble[:200]:
        assert max(pair.closure_residuals().values()) < 1e-12
        assert disFF_residual(pair) < 1e-12


def test_closure_with_general_upstream_deformation(mach2_pair, ideal_gas):
    F_up = np.array([[1.2, 0.1, 0.0], [0.0, 0.9, 0.2], [0.1, 0.0, 1.1]])
    pair = ShockPair.from_states(mach2_pair.up, mach2_pair.down, mach2_pair.frame, F_up=F_up)
    assert max(pair.closure_residuals().values()) < 1e-12
    assert disFF_residual(pair) < 1e-12
    assert np.linalg.norm(reference_surface_term(pair, ideal_gas)) < 1e-10
    _, ratio = det_jump_identity(F_up, pair.velocity_jump, -pair.w, pair.u_up, pair.u_down)
    assert ratio < 1e-12


def test_reference_variation_jumps_across_shock(mach2_pair):
    zeta_up, zeta_down = variation_jump(mach2_pair, [0.3, 1.0, 0.5, -0.2])
    assert np.linalg.norm(zeta_down - zeta_up) > 1e-3


# ====================================================
# CONTACT SURFACES
# ====================================================


def _contact_pair(ideal_gas):
    up = FluidState.from_pressure(1.0, [0.0, 0.3, 0.0], 1.0, ideal_gas)
    down = FluidState.from_pressure(0.25, [0.0, -0.2, 0.0], 1.0, ideal_gas)
    return ShockPair.from_states(up, down, SurfaceFrame(n=[1.0, 0.0, 0.0]))


def test_contact_conditions(ideal_gas):
    pair = _contact_pair(ideal_gas)
    report = contact_conditions(pair, ideal_gas)
    assert report["is_contact"]
    assert report["density_jump"] == pytest.approx(-0.75)
    assert report["tangential_velocity_jump"][1] == pytest.approx(-0.5 / np.sqrt(1.4))
    np.testing.assert_array_equal(pair.w, np.zeros(3))
    assert np.linalg.norm(spacetime_surface_term(pair, ideal_gas)) < 1e-12


def test_contact_rejected_by_shock_conditions(ideal_gas):
    pair = _contact_pair(ideal_gas)
    with pytest.raises(ContactSurfaceError):
        rh_residuals(pair, ideal_gas)
    with pytest.raises(ContactSurfaceError):
        reference_surface_term(pair, ideal_gas)


def test_pressure_jump_is_not_a_contact(ideal_gas):
    up = FluidState.from_pressure(1.0, [0.0, 0.0, 0.0], 1.0, ideal_gas)
    down = FluidState.from_pressure(1.0, [0.0, 0.0, 0.0], 2.0, ideal_gas)
    pair = ShockPair.from_states(up, down, SurfaceFrame(n=[1.0, 0.0, 0.0]))
    assert not contact_conditions(pair, ideal_gas)["is_contact"]


# ====================================================
# ROOT FINDING
# ====================================================


def test_bisect_newton_reaches_machine_precision():
    root = bisect_newton(lambda x: x * x - 2.0, 0.0, 2.0)
    assert root == pytest.approx(np.sqrt(2.0), rel=1e-14)


def test_root_finding_errors():
    with pytest.raises(RootNotBracketedError):
        bisect_newton(lambda x: x * x + 1.0, 0.0, 2.0)
    with pytest.raises(RootNotBracketedError):
        find_upper_bracket(lambda x: 1.0, 0.0, 1.0, max_iter=5)
    assert find_upper_bracket(lambda x: x - 10.0, 0.0, 1.0) == 16.0
