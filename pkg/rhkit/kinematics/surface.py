"""
Moving-surface frames and jump geometry.

A surface S_t moving with normal speed D_n has space-time normal covector
N* = (-D_n, n*). The fluid crosses it with relative normal velocity
u = n.v - D_n; a shock is a surface with u != 0. Seen from the reference
configuration the same surface has normal n0 and speed u0, and the
shock-adapted parametrization covector w satisfies

    n* F / u = n0* / u0 = n0'* = -w*

Orientation: n points from side 1 (upstream) to side 2 (downstream), so an
upstream state has u > 0.
"""

from dataclasses import dataclass

import numpy as np

from rhkit.errors import (
    DegenerateParametrizationError,
    InvalidInputError,
    SingularTangentMapError,
    ZeroRelativeVelocityError,
)
from rhkit.kinematics.tangent_map import _matrix, _vector

# |u| below this is a contact surface
CONTACT_THRESHOLD = 1e-10
UNIT_NORMAL_TOL = 1e-14


@dataclass(frozen=True)
class SurfaceFrame:
    """Unit normal n of S_t and its normal speed D_n."""

    n: np.ndarray
    D_n: float = 0.0

    def __post_init__(self):
        n = _vector(self.n, "n")
        if abs(np.linalg.norm(n) - 1.0) > UNIT_NORMAL_TOL:
            raise InvalidInputError(f"normal must have unit length, |n| = {np.linalg.norm(n)!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "D_n", float(self.D_n))

    @classmethod
    def from_direction(cls, direction, D_n: float = 0.0) -> "SurfaceFrame":
        """Build a frame from any non-zero direction, normalising it."""
        direction = _vector(direction, "direction")
        norm = np.linalg.norm(direction)
        if norm == 0.0:
            raise InvalidInputError("normal direction is the zero vector")
        n = direction / norm
        # renormalise once more so |n| - 1 sits at rounding level
        return cls(n=n / np.linalg.norm(n), D_n=D_n)

    @property
    def covector(self) -> np.ndarray:
        """Space-time normal N* = (-D_n, n*)."""
        return np.concatenate(([-self.D_n], self.n))

    def relative_velocity(self, v) -> float:
        return relative_velocity(self, v)

    def tangential(self, v) -> np.ndarray:
        """Tangential projection v - (n.v) n."""
        v = _vector(v, "v")
        return v - np.dot(self.n, v) * self.n


@dataclass(frozen=True)
class ReferenceFrame:
    """Reference-side view of the surface: n0'* = n0*/u0 and u0 = -D_{n0}."""

    n0p: np.ndarray
    u0: float

    def __post_init__(self):
        object.__setattr__(self, "n0p", _vector(self.n0p, "n0p"))
        object.__setattr__(self, "u0", float(self.u0))

    @classmethod
    def from_w(cls, w) -> "ReferenceFrame":
        """
        Recover the reference frame from the shock-adapted covector.

        n0'* = -w*, and since |n0| = 1 the reference speed is u0 = 1 / |w|.
        """
        w = _vector(w, "w")
        norm = np.linalg.norm(w)
        if norm == 0.0:
            raise DegenerateParametrizationError("w = 0 carries no surface (lambda = t)")
        return cls(n0p=-w, u0=1.0 / norm)

    @property
    def n0(self) -> np.ndarray:
        """Unit reference normal."""
        return self.n0p * self.u0

    @property
    def w(self) -> np.ndarray:
        return -self.n0p


def relative_velocity(frame: SurfaceFrame, v) -> float:
    """
    Normal velocity of the medium relative to the moving surface.

    Args:
        frame: Surface frame (n, D_n)
        v: Fluid velocity

    Returns:
        u = n.v - D_n
    """
    return float(np.dot(frame.n, _vector(v, "v")) - frame.D_n)


def w_from_deformation(F, u: float, n) -> np.ndarray:
    """
    Shock-adapted parametrization covector w* = -(n* F) / u.

    Raises:
        ZeroRelativeVelocityError: |u| below the contact threshold
    """
    F = _matrix(F, "F")
    n = _vector(n, "n")
    if abs(u) < CONTACT_THRESHOLD:
        raise ZeroRelativeVelocityError(f"relative velocity u = {u!r} is a contact surface")
    if np.linalg.det(F) == 0.0:
        raise SingularTangentMapError("deformation gradient F is singular")
    return -(n @ F) / u


def jump_deformation(dv, n0p) -> np.ndarray:
    """Rank-one jump [F] = [v] n0'* of the deformation gradient."""
    return np.outer(_vector(dv, "dv"), _vector(n0p, "n0p"))
