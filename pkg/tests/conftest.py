from pathlib import Path

import numpy as np
import pytest

from rhkit.eos import IdealGas
from rhkit.kinematics import SurfaceFrame
from rhkit.tensors import FluidState

CONFIG_DIR = Path(__file__).resolve().parents[1] / "config"


@pytest.fixture
def config_dir() -> Path:
    return CONFIG_DIR


@pytest.fixture
def ideal_gas() -> IdealGas:
    return IdealGas(gamma=1.4)


@pytest.fixture
def mach2_upstream(ideal_gas) -> FluidState:
    """rho = 1, p = 1, moving at Mach 2 along x1."""
    c = np.sqrt(1.4)
    return FluidState.from_pressure(1.0, [2.0 * c, 0.0, 0.0], 1.0, ideal_gas)


@pytest.fixture
def x_frame() -> SurfaceFrame:
    return SurfaceFrame(n=[1.0, 0.0, 0.0])


@pytest.fixture
def sod_states(ideal_gas):
    left = FluidState.from_pressure(1.0, [0.0, 0.0, 0.0], 1.0, ideal_gas)
    right = FluidState.from_pressure(0.125, [0.0, 0.0, 0.0], 0.1, ideal_gas)
    return left, right
