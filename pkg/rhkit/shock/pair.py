"""
Upstream/downstream state pair across a moving surface, with its kinematic closure.

For a shock (u != 0) the shock-adapted parametrization fixes

    w*       = -n* F_up / u_up = -n* F_down / u_down
    F_down   = F_up + [v] n0'*,     n0'* = -w*
    f_ref    = rho_up det F_up  ( = rho_down det F_down when [rho u] = 0 )
"""

from dataclasses import dataclass, replace
from typing import Dict, Optional

import numpy as np

from rhkit.kinematics import (
    CONTACT_THRESHOLD,
    SurfaceFrame,
    jump_deformation,
    relative_velocity,
    w_from_deformation,
)
from rhkit.kinematics.tangent_map import _matrix
from rhkit.tensors import FluidState


@dataclass(frozen=True)
class ShockPair:
    """Two states separated by a surface, with deformation gradients, w and f."""

    up: FluidState
    down: FluidState
    frame: SurfaceFrame
    F_up: np.ndarray
    F_down: np.ndarray
    f_ref: float
    w: np.ndarray

    @classmethod
    def from_states(
        cls,
        up: FluidState,
        down: FluidState,
        frame: SurfaceFrame,
        F_up: Optional[np.ndarray] = None,
    ) -> "ShockPair":
        """
        Build a pair and fill its kinematic closure from the upstream side.

        Contact pairs (|u_up| below the contact threshold) carry w = 0 and
        F_down = F_up since w is undefined there.

        Args:
            up: Upstream state (u > 0 for the frame orientation)
            down: Downstream state
            frame: Surface frame
            F_up: Upstream deformation gradient (identity when omitted)

        Returns:
            ShockPair
        """
        F_up = np.eye(3) if F_up is None else _matrix(F_up, "F_up")
        u_up = relative_velocity(frame, up.v)
        if abs(u_up) < CONTACT_THRESHOLD:
            w = np.zeros(3)
            F_down = F_up.copy()
        else:
            w = w_from_deformation(F_up, u_up, frame.n)
            F_down = F_up + jump_deformation(down.v - up.v, -w)
        f_ref = up.rho * float(np.linalg.det(F_up))
        return cls(up=up, down=down, frame=frame, F_up=F_up, F_down=F_down, f_ref=f_ref, w=w)

    @property
    def u_up(self) -> float:
        return relative_velocity(self.frame, self.up.v)

    @property
    def u_down(self) -> float:
        return relative_velocity(self.frame, self.down.v)

    @property
    def velocity_jump(self) -> np.ndarray:
        return self.down.v - self.up.v

    def closure_residuals(self) -> Dict[str, float]:
        """
        Residuals of the three closure relations.

        Returns:
            Dictionary with ``key_relation`` (w against both sides),
            ``deformation_jump`` ([F] against [v] (-w)) and ``reference_density``
            ([rho det F])
        """
        n = self.frame.n
        key_relation = max(
            np.max(np.abs(self.w + n @ self.F_up / self.u_up)),
            np.max(np.abs(self.w + n @ self.F_down / self.u_down)),
        )
        deformation_jump = np.max(
            np.abs(self.F_down - self.F_up - jump_deformation(self.velocity_jump, -self.w))
        )
        reference_density = abs(
            self.down.rho * np.linalg.det(self.F_down) - self.up.rho * np.linalg.det(self.F_up)
        )
        return {
            "key_relation": float(key_relation),
            "deformation_jump": float(deformation_jump),
            "reference_density": float(reference_density),
        }

    def boosted(self, delta: float) -> "ShockPair":
        """
        Galilean boost by ``delta`` along n: both velocities and D_n shift, u does not.
        """
        shift = delta * self.frame.n
        return replace(
            self,
            up=self.up.with_velocity(self.up.v + shift),
            down=self.down.with_velocity(self.down.v + shift),
            frame=SurfaceFrame(n=self.frame.n, D_n=self.frame.D_n + delta),
        )

    def rotated(self, rotation) -> "ShockPair":
        """Apply a common spatial rotation to n, both velocities and both F."""
        R = _matrix(rotation, "rotation")
        n = R @ self.frame.n
        return replace(
            self,
            up=self.up.with_velocity(R @ self.up.v),
            down=self.down.with_velocity(R @ self.down.v),
            frame=SurfaceFrame(n=n / np.linalg.norm(n), D_n=self.frame.D_n),
            F_up=R @ self.F_up,
            F_down=R @ self.F_down,
        )

    def swapped(self) -> "ShockPair":
        """Same surface with the two sides exchanged (closure rebuilt from the new upstream)."""
        return ShockPair.from_states(self.down, self.up, self.frame, F_up=self.F_down)

    def to_dict(self) -> dict:
        return {
            "up": self.up.to_dict(),
            "down": self.down.to_dict(),
            "n": self.frame.n.tolist(),
            "D_n": self.frame.D_n,
            "F_up": self.F_up.tolist(),
            "F_down": self.F_down.tolist(),
            "f_ref": self.f_ref,
            "w": self.w.tolist(),
        }
