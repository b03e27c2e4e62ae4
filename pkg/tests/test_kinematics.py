import numpy as np
import pytest

from rhkit.errors import (
    DegenerateParametrizationError,
    InvalidInputError,
    SingularTangentMapError,
    ZeroRelativeVelocityError,
)
from rhkit.kinematics import (
    ReferenceFrame,
    SurfaceFrame,
    TangentMap,
    assemble_tangent_map,
    decompose_tangent_map,
    jump_deformation,
    map_variation,
    relative_velocity,
    shock_adapted_maps,
    unmap_variation,
    w_from_deformation,
)


def _random_tangent_map(rng):
    mu = rng.uniform(0.5, 2.0)
    w = rng.uniform(-0.5, 0.5, size=3)
    v = rng.uniform(-1.0, 1.0, size=3)
    F = np.eye(3) + 0.3 * rng.uniform(-1.0, 1.0, size=(3, 3))
    return mu, w, v, F


def test_decompose_recovers_velocity_and_deformation():
    rng = np.random.default_rng(3)
    mu, w, v, F = _random_tangent_map(rng)
    blocks, motion = decompose_tangent_map(assemble_tangent_map(mu, w, v, F))
    assert blocks.mu == pytest.approx(mu)
    np.testing.assert_allclose(blocks.w, w, atol=1e-15)
    np.testing.assert_allclose(motion.v, v, atol=1e-14)
    np.testing.assert_allclose(motion.F, F, atol=1e-14)
    np.testing.assert_allclose(motion.four_velocity, np.concatenate(([1.0], v)), atol=1e-14)
    assert motion.det_F == pytest.approx(np.linalg.det(F))


def test_lambda_equals_t_parametrization():
    B4 = TangentMap(mu=1.0, r=[0.2, 0.0, 0.0]).to_matrix()
    blocks, motion = decompose_tangent_map(B4)
    np.testing.assert_array_equal(blocks.w, np.zeros(3))
    np.testing.assert_array_equal(motion.F, np.eye(3))
    np.testing.assert_array_equal(motion.v, [0.2, 0.0, 0.0])


def test_zero_mu_is_degenerate():
    with pytest.raises(DegenerateParametrizationError):
        decompose_tangent_map(np.diag([0.0, 1.0, 1.0, 1.0]))
    with pytest.raises(DegenerateParametrizationError):
        TangentMap(mu=0.0)


def test_singular_deformation_gradient():
    with pytest.raises(SingularTangentMapError):
        decompose_tangent_map(np.diag([1.0, 0.0, 1.0, 1.0]))


def test_tangent_map_shape_checked():
    with pytest.raises(InvalidInputError):
        decompose_tangent_map(np.eye(3))


def test_variation_mapping_round_trip():
    rng = np.random.default_rng(8)
    for _ in range(1000):
        mu, w, v, F = _random_tangent_map(rng)
        B4 = assemble_tangent_map(mu, w, v, F)
        zeta_tilde = rng.uniform(-1.0, 1.0, size=4)
        zeta_hat = map_variation(B4, zeta_tilde)
        assert np.max(np.abs(zeta_tilde + B4 @ zeta_hat)) < 1e-13
        np.testing.assert_allclose(unmap_variation(B4, zeta_hat), zeta_tilde, atol=1e-13)


def test_map_variation_rejects_singular_map():
    B4 = np.eye(4)
    B4[2, 2] = 0.0
    with pytest.raises(SingularTangentMapError):
        map_variation(B4, [1.0, 0.0, 0.0, 0.0])


def test_surface_frame_requires_unit_normal():
    with pytest.raises(InvalidInputError):
        SurfaceFrame(n=[1.0, 1.0, 0.0])
    frame = SurfaceFrame.from_direction([3.0, 4.0, 0.0], D_n=0.5)
    np.testing.assert_allclose(frame.n, [0.6, 0.8, 0.0])
    np.testing.assert_allclose(frame.covector, [-0.5, 0.6, 0.8, 0.0])
    with pytest.raises(InvalidInputError):
        SurfaceFrame.from_direction([0.0, 0.0, 0.0])


def test_relative_velocity_and_tangential_part():
    frame = SurfaceFrame(n=[0.0, 1.0, 0.0], D_n=0.25)
    v = np.array([0.3, 1.0, -0.4])
    assert relative_velocity(frame, v) == pytest.approx(0.75)
    np.testing.assert_allclose(frame.tangential(v), [0.3, 0.0, -0.4])


def test_w_from_deformation_and_reference_frame():
    n = np.array([0.0, 0.0, 1.0])
    F = np.diag([1.0, 2.0, 0.5])
    w = w_from_deformation(F, 2.0, n)
    np.testing.assert_allclose(w, [0.0, 0.0, -0.25])
    reference = ReferenceFrame.from_w(w)
    assert reference.u0 == pytest.approx(4.0)
    np.testing.assert_allclose(reference.n0, [0.0, 0.0, 1.0])
    np.testing.assert_allclose(reference.w, w)


def test_contact_has_no_shock_parametrization():
    with pytest.raises(ZeroRelativeVelocityError):
        w_from_deformation(np.eye(3), 0.0, [1.0, 0.0, 0.0])
    with pytest.raises(DegenerateParametrizationError):
        ReferenceFrame.from_w(np.zeros(3))


def test_shock_adapted_maps_share_spatial_block():
    u1, u2 = 2.0, 0.75
    n = np.array([1.0, 0.0, 0.0])
    v_up = np.array([u1, 0.3, 0.0])
    v_down = v_up + (u2 - u1) * n
    w = w_from_deformation(np.eye(3), u1, n)
    F_down = np.eye(3) + jump_deformation(v_down - v_up, -w)
    B_up, B_down = shock_adapted_maps(w, v_up, np.eye(3), v_down, F_down)
    # only the r column jumps
    np.testing.assert_allclose(B_up[:, 1:], B_down[:, 1:], atol=1e-15)
    np.testing.assert_allclose(B_down[1:, 0] - B_up[1:, 0], v_down - v_up)
