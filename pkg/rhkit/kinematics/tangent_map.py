"""
Space-time tangent-map algebra.

A motion parametrized by (lambda, X) has the 4x4 tangent map

    B4 = | mu  w* |        dt = mu dlambda + w* dX
         | r   B3 |        dx = r  dlambda + B3 dX

Eliminating dlambda gives the fluid velocity v = r / mu and the deformation
gradient F = B3 - v w*. The choice lambda = t (mu = 1, w = 0) reduces B4 to
the usual A4 = [[1, 0], [v, F]].
"""

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from rhkit.errors import DegenerateParametrizationError, InvalidInputError, SingularTangentMapError

# 1 / cond(B4) below this is treated as a singular map
SINGULAR_RCOND = 1e-14


def _vector(values, name: str) -> np.ndarray:
    array = np.asarray(values, dtype=float)
    if array.shape != (3,):
        raise InvalidInputError(f"{name} must be a 3-vector, got shape {array.shape}")
    return array


def _matrix(values, name: str, size: int = 3) -> np.ndarray:
    array = np.asarray(values, dtype=float)
    if array.shape != (size, size):
        raise InvalidInputError(f"{name} must be {size}x{size}, got shape {array.shape}")
    return array


@dataclass(frozen=True)
class TangentMap:
    """Blocks (mu, w, r, B3) of a 4x4 space-time tangent map."""

    mu: float
    w: np.ndarray = field(default_factory=lambda: np.zeros(3))
    r: np.ndarray = field(default_factory=lambda: np.zeros(3))
    B3: np.ndarray = field(default_factory=lambda: np.eye(3))

    def __post_init__(self):
        if self.mu == 0.0:
            raise DegenerateParametrizationError("mu = dt/dlambda vanishes")
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "w", _vector(self.w, "w"))
        object.__setattr__(self, "r", _vector(self.r, "r"))
        object.__setattr__(self, "B3", _matrix(self.B3, "B3"))

    def to_matrix(self) -> np.ndarray:
        B4 = np.empty((4, 4))
        B4[0, 0] = self.mu
        B4[0, 1:] = self.w
        B4[1:, 0] = self.r
        B4[1:, 1:] = self.B3
        return B4


@dataclass(frozen=True)
class Motion4Velocity:
    """Fluid velocity and deformation gradient read off a tangent map."""

    v: np.ndarray
    F: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "v", _vector(self.v, "v"))
        object.__setattr__(self, "F", _matrix(self.F, "F"))
        if np.linalg.det(self.F) == 0.0:
            raise SingularTangentMapError("deformation gradient F is singular")

    @property
    def four_velocity(self) -> np.ndarray:
        """Space-time velocity (1, v)."""
        return np.concatenate(([1.0], self.v))

    @property
    def det_F(self) -> float:
        return float(np.linalg.det(self.F))


def decompose_tangent_map(B4) -> Tuple[TangentMap, Motion4Velocity]:
    """
    Split a 4x4 tangent map into its blocks and the derived motion.

    Args:
        B4: 4x4 matrix with B4[0, 0] = mu

    Returns:
        (TangentMap, Motion4Velocity) with v = r / mu and F = B3 - v w*
    """
    B4 = _matrix(B4, "B4", size=4)
    mu = B4[0, 0]
    if mu == 0.0:
        raise DegenerateParametrizationError("B4[0, 0] = mu is zero")
    blocks = TangentMap(mu=mu, w=B4[0, 1:].copy(), r=B4[1:, 0].copy(), B3=B4[1:, 1:].copy())
    v = blocks.r / mu
    F = blocks.B3 - np.outer(v, blocks.w)
    return blocks, Motion4Velocity(v=v, F=F)


def assemble_tangent_map(mu, w, v, F) -> np.ndarray:
    """Inverse of :func:`decompose_tangent_map`: r = mu v, B3 = F + v w*."""
    if mu == 0.0:
        raise DegenerateParametrizationError("mu = dt/dlambda vanishes")
    w = _vector(w, "w")
    v = _vector(v, "v")
    F = _matrix(F, "F")
    return TangentMap(mu=mu, w=w, r=mu * v, B3=F + np.outer(v, w)).to_matrix()


def shock_adapted_maps(w, v_up, F_up, v_down, F_down, mu: float = 1.0):
    """
    Per-side tangent maps of the shock-adapted parametrization.

    Both sides share mu and w; when [v] w* + [F] = O the spatial blocks B3
    coincide as well, so only the r column jumps.

    Returns:
        (B4_up, B4_down)
    """
    return assemble_tangent_map(mu, w, v_up, F_up), assemble_tangent_map(mu, w, v_down, F_down)


# ====================================================
# VIRTUAL DISPLACEMENTS
# ====================================================


def _check_invertible(B4: np.ndarray):
    if not np.all(np.isfinite(B4)):
        raise SingularTangentMapError("tangent map has non-finite entries")
    if 1.0 / np.linalg.cond(B4) < SINGULAR_RCOND:
        raise SingularTangentMapError("tangent map is singular")


def map_variation(B4, zeta_tilde) -> np.ndarray:
    """
    Reference-space virtual displacement of a space-time one.

    Solves zeta_tilde + B4 zeta_hat = 0.

    Args:
        B4: Invertible 4x4 tangent map
        zeta_tilde: Space-time virtual displacement (4-vector)

    Returns:
        zeta_hat = -B4^{-1} zeta_tilde
    """
    B4 = _matrix(B4, "B4", size=4)
    zeta_tilde = np.asarray(zeta_tilde, dtype=float)
    if zeta_tilde.shape != (4,):
        raise InvalidInputError(f"zeta_tilde must be a 4-vector, got shape {zeta_tilde.shape}")
    _check_invertible(B4)
    return -np.linalg.solve(B4, zeta_tilde)


def unmap_variation(B4, zeta_hat) -> np.ndarray:
    """Space-time virtual displacement zeta_tilde = -B4 zeta_hat."""
    B4 = _matrix(B4, "B4", size=4)
    zeta_hat = np.asarray(zeta_hat, dtype=float)
    if zeta_hat.shape != (4,):
        raise InvalidInputError(f"zeta_hat must be a 4-vector, got shape {zeta_hat.shape}")
    return -B4 @ zeta_hat
