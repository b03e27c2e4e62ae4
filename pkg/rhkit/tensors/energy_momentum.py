"""
Energy-momentum tensor T, reference tensor T0 and body-force covector.

Index convention: ``T[i, j]`` has i as the divergence index and j as the
covector index, so that (Div T)_j = sum_i dT[i, j]/dz_i with z = (t, x).
For a conservative fluid with Lagrangian L = rho |v|^2 / 2 - rho alpha - rho Omega,

    T  = | -e          rho v*          |      T0 = f | 0   -v* F - m w* |
         | -(e + p) v  rho v v* + p I  |             | 0   m mu I       |

with e = rho (|v|^2 / 2 + alpha + Omega) and m = |v|^2 / 2 - h - Omega.
The Lagrangian forms T = L I + B4 (dL/dB4)^T and T0 = -det(B4) (dL/dB4)^T B4
are provided as finite-difference oracles.
"""

from dataclasses import dataclass

import numpy as np

from rhkit.eos import Eos
from rhkit.errors import NonPositiveReferenceDensityError
from rhkit.kinematics.tangent_map import _matrix, _vector
from rhkit.tensors.state import FluidState


@dataclass(frozen=True)
class SpaceTimeTensor:
    """4x4 space-time tensor with (time, space) block access."""

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _matrix(self.entries, "entries", size=4))

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    @property
    def time_time(self) -> float:
        return float(self.entries[0, 0])

    @property
    def time_space(self) -> np.ndarray:
        return self.entries[0, 1:]

    @property
    def space_time(self) -> np.ndarray:
        return self.entries[1:, 0]

    @property
    def space_space(self) -> np.ndarray:
        return self.entries[1:, 1:]


def energy_density(state: FluidState, eos: Eos) -> float:
    """Total volume energy e = rho (|v|^2 / 2 + alpha + Omega)."""
    alpha = float(state.thermo(eos).alpha)
    return state.rho * (0.5 * float(state.v @ state.v) + alpha + state.omega)


def energy_momentum_T(state: FluidState, eos: Eos) -> SpaceTimeTensor:
    """
    Assemble the energy-momentum tensor of a fluid state.

    Args:
        state: Fluid state
        eos: Equation of state

    Returns:
        SpaceTimeTensor with blocks (-e, rho v*; -(e + p) v, rho v v* + p I)
    """
    e = energy_density(state, eos)
    p = float(state.thermo(eos).p)
    rho, v = state.rho, state.v
    T = np.empty((4, 4))
    T[0, 0] = -e
    T[0, 1:] = rho * v
    T[1:, 0] = -(e + p) * v
    T[1:, 1:] = rho * np.outer(v, v) + p * np.eye(3)
    return SpaceTimeTensor(T)


def reference_tensor_T0(state: FluidState, F, mu: float, w, f: float, eos: Eos) -> SpaceTimeTensor:
    """
    Assemble the reference-space tensor T0.

    Args:
        state: Fluid state (supplies v and m)
        F: Deformation gradient
        mu: dt/dlambda of the parametrization
        w: Parametrization covector dt/dX
        f: Conserved reference density (> 0)
        eos: Equation of state

    Returns:
        SpaceTimeTensor f (0, -v* F - m w*; 0, m mu I)
    """
    if not f > 0.0:
        raise NonPositiveReferenceDensityError(f"reference density must be positive, got {f}")
    F = _matrix(F, "F")
    w = _vector(w, "w")
    m = state.m(eos)
    T0 = np.zeros((4, 4))
    T0[0, 1:] = -(state.v @ F) - m * w
    T0[1:, 1:] = m * mu * np.eye(3)
    return SpaceTimeTensor(f * T0)


def body_force(state: FluidState, grad_omega, domega_dt: float = 0.0) -> np.ndarray:
    """Body-force covector F* = -rho dOmega/dz = (-rho dOmega/dt, -rho grad Omega)."""
    return -state.rho * np.concatenate(([domega_dt], _vector(grad_omega, "grad_omega")))


# ====================================================
# LAGRANGIAN FORMS
# ====================================================


def lagrangian_density(B4, f: float, s: float, omega: float, eos: Eos) -> float:
    """
    Fluid Lagrangian as a function of the tangent map.

    rho = f mu / det(B4) and v = r / mu are read off B4; then
    L = rho |v|^2 / 2 - rho alpha(rho, s) - rho Omega.
    """
    B4 = _matrix(B4, "B4", size=4)
    mu = B4[0, 0]
    rho = f * mu / np.linalg.det(B4)
    v = B4[1:, 0] / mu
    return 0.5 * rho * float(v @ v) - rho * float(eos.alpha(rho, s)) - rho * omega


def lagrangian_gradient(B4, f: float, s: float, omega: float, eos: Eos, step: float = 1e-5):
    """Central-difference gradient G[i, j] = dL/dB4[i, j]."""
    B4 = _matrix(B4, "B4", size=4)
    G = np.empty((4, 4))
    for i in range(4):
        for j in range(4):
            plus, minus = B4.copy(), B4.copy()
            plus[i, j] += step
            minus[i, j] -= step
            G[i, j] = (
                lagrangian_density(plus, f, s, omega, eos)
                - lagrangian_density(minus, f, s, omega, eos)
            ) / (2.0 * step)
    return G


def spacetime_tensor_from_lagrangian(B4, f, s, omega, eos: Eos, step: float = 1e-5):
    """T = L I + B4 G^T evaluated by finite differences of L in B4."""
    B4 = _matrix(B4, "B4", size=4)
    L = lagrangian_density(B4, f, s, omega, eos)
    G = lagrangian_gradient(B4, f, s, omega, eos, step=step)
    return SpaceTimeTensor(L * np.eye(4) + B4 @ G.T)


def reference_tensor_from_lagrangian(B4, f, s, omega, eos: Eos, step: float = 1e-5):
    """T0 = -det(B4) G^T B4 evaluated by finite differences of L in B4."""
    B4 = _matrix(B4, "B4", size=4)
    G = lagrangian_gradient(B4, f, s, omega, eos, step=step)
    return SpaceTimeTensor(-np.linalg.det(B4) * G.T @ B4)
