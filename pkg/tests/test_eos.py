from hypothesis import given, settings
from hypothesis import strategies as st
import numpy as np
from pydantic import ValidationError
import pytest

from rhkit.eos import (
    Eos,
    EosKind,
    IdealGas,
    StiffenedGas,
    evaluate,
    gibbs_residual,
    load_eos,
    volume_curvature,
)
from rhkit.errors import InvalidInputError, NonPositiveDensityError, SoundSpeedUndefinedError

densities = st.floats(min_value=0.1, max_value=10.0, allow_nan=False, allow_infinity=False)
entropies = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
gammas = st.floats(min_value=1.1, max_value=1.67, allow_nan=False, allow_infinity=False)

EOS_CASES = [
    IdealGas(gamma=1.4),
    IdealGas(gamma=5.0 / 3.0, c_v=2.5),
    StiffenedGas(gamma=4.4, p_inf=6.0),
]


def test_ideal_gas_closed_forms():
    eos = IdealGas(gamma=1.4)
    point = eos.evaluate(1.0, 0.0)
    assert point.alpha == pytest.approx(2.5)
    assert point.p == pytest.approx(1.0)
    assert point.h == pytest.approx(3.5)
    assert point.theta == pytest.approx(2.5)
    assert point.c2 == pytest.approx(1.4)


def test_stiffened_gas_pressure_shift():
    eos = StiffenedGas(gamma=4.4, p_inf=6.0)
    point = eos.evaluate(1.0, 0.0)
    assert point.p == pytest.approx(1.0 - 6.0)
    # c^2 = gamma (p + p_inf) / rho
    assert point.c2 == pytest.approx(4.4 * (point.p + 6.0))
    assert eos.reference_pressure == 6.0


@pytest.mark.parametrize("eos", EOS_CASES)
def test_enthalpy_is_alpha_plus_p_over_rho(eos):
    rho = np.array([0.3, 1.0, 4.2])
    s = np.array([-0.5, 0.0, 0.7])
    point = evaluate(eos, rho, s)
    np.testing.assert_allclose(eos.enthalpy(rho, s), point.alpha + point.p / rho, rtol=1e-12)
    np.testing.assert_allclose(point.h, point.alpha + point.p / rho, rtol=0, atol=0)


@pytest.mark.parametrize("eos", EOS_CASES)
def test_pressure_and_enthalpy_inversions(eos):
    rho, s = 2.0, 0.3
    p = float(eos.pressure(rho, s))
    h = float(eos.enthalpy(rho, s))
    assert float(eos.entropy_from_pressure(rho, p)) == pytest.approx(s, abs=1e-13)
    assert float(eos.entropy_from_enthalpy(rho, h)) == pytest.approx(s, abs=1e-13)
    assert float(eos.enthalpy_from_pressure(rho, p)) == pytest.approx(h, rel=1e-14)


@given(rho=densities, s=entropies, gamma=gammas)
@settings(max_examples=200, deadline=None)
def test_gibbs_identity(rho, s, gamma):
    eos = IdealGas(gamma=gamma)
    residual = gibbs_residual(eos, rho, s, drho=1e-4 * rho, ds=1e-4)
    assert residual < 1e-10 * float(eos.enthalpy(rho, s))


@given(rho=densities, s=entropies)
@settings(max_examples=200, deadline=None)
def test_alpha_strictly_convex_in_specific_volume(rho, s):
    for eos in EOS_CASES:
        assert volume_curvature(eos, rho, s) > 0.0


def test_max_compression_ratio():
    assert IdealGas(gamma=1.4).max_compression_ratio() == pytest.approx(6.0)
    assert IdealGas(gamma=5.0 / 3.0).max_compression_ratio() == pytest.approx(4.0)


def test_non_positive_density_rejected():
    with pytest.raises(NonPositiveDensityError):
        IdealGas().evaluate(0.0, 0.0)
    with pytest.raises(NonPositiveDensityError):
        IdealGas().evaluate(np.array([1.0, -1.0]), 0.0)


def test_pressure_below_stiffening_has_no_entropy():
    with pytest.raises(SoundSpeedUndefinedError):
        IdealGas().entropy_from_pressure(1.0, -1.0)
    with pytest.raises(SoundSpeedUndefinedError):
        StiffenedGas(gamma=4.4, p_inf=6.0).entropy_from_pressure(1.0, -7.0)


def test_invalid_parameters_rejected():
    with pytest.raises(InvalidInputError):
        IdealGas(gamma=1.0)
    with pytest.raises(InvalidInputError):
        StiffenedGas(gamma=4.4, p_inf=-1.0)


def test_eos_dict_round_trip():
    eos = StiffenedGas(gamma=4.4, c_v=2.0, p_inf=6.0)
    rebuilt = Eos.from_dict(eos.to_dict())
    assert rebuilt == eos
    assert rebuilt.kind is EosKind.STIFFENED_GAS


def test_unknown_eos_keys_rejected():
    with pytest.raises(ValidationError):
        Eos.from_dict({"kind": "ideal_gas", "gamma": 1.4, "mu": 1.0})
    with pytest.raises(ValidationError):
        Eos.from_dict({"kind": "van_der_waals"})


def test_load_eos_files(config_dir):
    assert load_eos(config_dir / "eos_ideal.json") == IdealGas(gamma=1.4)
    assert load_eos(config_dir / "eos_stiffened.json") == StiffenedGas(gamma=4.4, p_inf=6.0)
    with pytest.raises(FileNotFoundError):
        load_eos(config_dir / "missing.json")


def test_worked_examples():
    eos = IdealGas(gamma=1.4, c_v=1.0, K=1.0)
    assert float(eos.pressure(2.0, 0.0)) == pytest.approx(2.0**1.4, rel=1e-14)
    assert float(eos.pressure(2.0, 0.0)) == pytest.approx(2.639015, abs=1e-6)

    rho, s, step = 1.3, 0.2, 1e-5
    p = float(eos.pressure(rho, s))
    dalpha = (eos.alpha(rho + step, s) - eos.alpha(rho - step, s)) / (2.0 * step)
    assert abs(p - rho**2 * dalpha) < 1e-6 * p

    assert gibbs_residual(eos, 1.0, 0.0, drho=0.0, ds=0.0) == 0.0
    assert gibbs_residual(eos, 1.0, 0.0, drho=1e-4, ds=0.0) < 1e-9
    assert gibbs_residual(eos, 1.0, 0.0, drho=1e-4, ds=1e-4) < 1e-9


def _central(fn, x, step):
    return (fn(x + step) - fn(x - step)) / (2.0 * step)


@pytest.mark.parametrize("eos", EOS_CASES)
@given(rho=densities, s=st.floats(min_value=-1.0, max_value=1.0))
@settings(max_examples=300, deadline=None)
def test_closed_forms_match_derivatives_of_alpha(eos, rho, s):
    step = 1e-5
    point = eos.evaluate(rho, s)
    # p_inf / rho sets the size of the cancelling terms of a stiffened gas
    shift = eos.reference_pressure / rho

    p_fd = rho**2 * _central(lambda r: float(eos.alpha(r, s)), rho, step)
    assert abs(p_fd - point.p) < 1e-6 * (abs(point.p) + eos.reference_pressure)

    theta_fd = _central(lambda e: float(eos.alpha(rho, e)), s, step)
    assert abs(theta_fd - point.theta) < 1e-6 * (point.theta + shift / eos.c_v)

    c2_fd = _central(lambda r: float(eos.pressure(r, s)), rho, step)
    assert abs(c2_fd - point.c2) < 1e-6 * (point.c2 + shift)


@pytest.mark.parametrize("eos", EOS_CASES)
@given(rho=densities, s=entropies, factor=st.floats(min_value=1.001, max_value=3.0))
@settings(max_examples=200, deadline=None)
def test_pressure_strictly_increasing_in_density(eos, rho, s, factor):
    assert float(eos.pressure(rho * factor, s)) > float(eos.pressure(rho, s))


@pytest.mark.parametrize("eos", EOS_CASES)
def test_pressure_monotone_on_a_grid(eos):
    rho = np.geomspace(0.1, 10.0, 500)
    assert np.all(np.diff(eos.pressure(rho, 0.3)) > 0.0)
