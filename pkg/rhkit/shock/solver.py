"""
Downstream-state solver, Hugoniot locus and the reference-variation counterexample.

The normal jump is solved in the frame of the surface from

    [rho u] = 0,   [p + rho u^2] = 0,   [u^2/2 + h] = 0

for any EOS that provides the caloric form h(rho, p). Given the normal
relative velocities, the tangential velocity is carried over unchanged and
the surface speed follows as D_n = n.v_up - u_up. The frame passed in only
fixes the normal n; the returned pair carries the implied D_n.
"""

from dataclasses import asdict, dataclass
import logging
from typing import List, Optional, Sequence, Union

import numpy as np

from rhkit.eos import Eos
from rhkit.errors import (
    ContactSurfaceError,
    EnthalpyUnreachableError,
    ExpansionShockRejectedError,
    InvalidInputError,
    NotSupersonicError,
    RatioOutOfRangeError,
)
from rhkit.kinematics import CONTACT_THRESHOLD, SurfaceFrame
from rhkit.shock.pair import ShockPair
from rhkit.shock.roots import bisect_newton, find_upper_bracket
from rhkit.tensors import FluidState
from rhkit.utils import default_logger

# entropy decrease tolerated as rounding before a shock is rejected
ENTROPY_TOL = 1e-12


@dataclass(frozen=True)
class Mach:
    """Upstream normal Mach number u_up / c_up (> 1)."""

    value: float


@dataclass(frozen=True)
class DownPressure:
    """Downstream pressure (>= upstream pressure)."""

    value: float


@dataclass(frozen=True)
class DownDensity:
    """Downstream density (>= upstream density)."""

    value: float


Strength = Union[Mach, DownPressure, DownDensity]


@dataclass(frozen=True)
class HugoniotPoint:
    rho2: float
    p2: float
    u2: float
    s2: float
    D_n: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class NormalJump:
    """Normal jump in the surface frame: densities, pressure and relative velocities."""

    rho2: float
    p2: float
    u1: float
    u2: float


class ShockSolver:
    """Solves the normal Rankine-Hugoniot system from an upstream state."""

    def __init__(self, eos: Eos, xtol: float = 1e-8, logger: Optional[logging.Logger] = None):
        """
        Initialize ShockSolver.

        Args:
            eos: Equation of state
            xtol: Relative bracket width at which bisection hands over to the secant polish
            logger: Optional logger instance for tracking operations
        """
        self.eos = eos
        self.xtol = xtol
        self.logger = logger or default_logger(__name__)

    # ----------------------------------------------------------------
    # normal jump in the surface frame
    # ----------------------------------------------------------------
    def _from_mach(self, up: FluidState, mach: float) -> NormalJump:
        if not mach > 1.0:
            raise NotSupersonicError(f"upstream Mach number must exceed 1, got {mach}")
        eos = self.eos
        rho1 = up.rho
        thermo = up.thermo(eos)
        p1, h1 = float(thermo.p), float(thermo.h)
        u1 = mach * float(np.sqrt(thermo.c2))

        def energy_defect(ratio):
            # energy jump divided by (1 - 1/ratio) to remove the trivial root at ratio = 1
            p2 = p1 + rho1 * u1**2 * (1.0 - 1.0 / ratio)
            h2 = float(eos.enthalpy_from_pressure(rho1 * ratio, p2))
            defect = h2 - h1 - 0.5 * u1**2 * (1.0 - 1.0 / ratio**2)
            return defect / (1.0 - 1.0 / ratio)

        ratio = bisect_newton(
            energy_defect, 1.0, eos.max_compression_ratio(), xtol=self.xtol, sign_lower=1.0
        )
        p2 = p1 + rho1 * u1**2 * (1.0 - 1.0 / ratio)
        return NormalJump(rho2=rho1 * ratio, p2=p2, u1=u1, u2=u1 / ratio)

    def _mass_flux(self, up: FluidState, rho2: float, p2: float) -> NormalJump:
        rho1, p1 = up.rho, up.pressure(self.eos)
        j2 = (p2 - p1) / (1.0 / rho1 - 1.0 / rho2)
        j = float(np.sqrt(j2))
        return NormalJump(rho2=rho2, p2=p2, u1=j / rho1, u2=j / rho2)

    def _hugoniot(self, up: FluidState):
        eos = self.eos
        rho1 = up.rho
        thermo = up.thermo(eos)
        p1, h1 = float(thermo.p), float(thermo.h)

        def hugoniot(rho2, p2):
            h2 = float(eos.enthalpy_from_pressure(rho2, p2))
            return h2 - h1 - 0.5 * (p2 - p1) * (1.0 / rho1 + 1.0 / rho2)

        return hugoniot, p1

    def _from_pressure(self, up: FluidState, p2: float) -> NormalJump:
        hugoniot, p1 = self._hugoniot(up)
        if p2 < p1:
            raise ExpansionShockRejectedError(
                f"downstream pressure {p2} below upstream {p1} would need s_down < s_up"
            )
        rho1 = up.rho
        rho_max = rho1 * self.eos.max_compression_ratio()
        rho2 = bisect_newton(lambda rho: hugoniot(rho, p2), rho1, rho_max, xtol=self.xtol)
        return self._mass_flux(up, rho2, p2)

    def _from_density(self, up: FluidState, rho2: float) -> NormalJump:
        hugoniot, p1 = self._hugoniot(up)
        rho1 = up.rho
        if rho2 < rho1:
            raise ExpansionShockRejectedError(
                f"downstream density {rho2} below upstream {rho1} would need s_down < s_up"
            )
        if not rho2 < rho1 * self.eos.max_compression_ratio():
            raise RatioOutOfRangeError(
                f"density ratio {rho2 / rho1} beyond the strong-shock limit "
                f"{self.eos.max_compression_ratio()}"
            )
        scale = p1 + self.eos.reference_pressure
        p_hi = find_upper_bracket(lambda p: hugoniot(rho2, p), p1, scale)
        p2 = bisect_newton(lambda p: hugoniot(rho2, p), p1, p_hi, xtol=self.xtol)
        return self._mass_flux(up, rho2, p2)

    def _zero_strength(self, up: FluidState) -> NormalJump:
        # acoustic limit: a zero-strength shock moves at the sound speed
        c1 = up.sound_speed(self.eos)
        return NormalJump(rho2=up.rho, p2=up.pressure(self.eos), u1=c1, u2=c1)

    def normal_jump(self, up: FluidState, strength: Strength) -> NormalJump:
        """Solve the normal jump only (no frame, no closure)."""
        if isinstance(strength, Mach):
            return self._from_mach(up, strength.value)
        if isinstance(strength, DownPressure):
            if strength.value == up.pressure(self.eos):
                return self._zero_strength(up)
            return self._from_pressure(up, strength.value)
        if isinstance(strength, DownDensity):
            if strength.value == up.rho:
                return self._zero_strength(up)
            return self._from_density(up, strength.value)
        raise InvalidInputError(f"unknown shock strength {strength!r}")

    # ----------------------------------------------------------------
    # pairs
    # ----------------------------------------------------------------
    def _assemble(self, up: FluidState, frame: SurfaceFrame, jump: NormalJump) -> ShockPair:
        n = frame.n
        D_n = float(n @ up.v) - jump.u1
        if D_n != frame.D_n:
            self.logger.debug(f"Surface speed set by the shock strength: D_n = {D_n:.12g}")
        if jump.rho2 == up.rho and jump.u2 == jump.u1:
            down = up
        else:
            v2 = up.v + (jump.u2 - jump.u1) * n
            down = FluidState.from_pressure(jump.rho2, v2, jump.p2, self.eos, omega=up.omega)
        return ShockPair.from_states(up, down, SurfaceFrame(n=n, D_n=D_n))

    def solve_downstream(
        self, up: FluidState, frame: SurfaceFrame, strength: Strength
    ) -> ShockPair:
        """
        Downstream state of the shock of the given strength.

        Args:
            up: Upstream state
            frame: Surface frame; its normal n orients the shock from up to down
            strength: Mach, DownPressure or DownDensity

        Returns:
            ShockPair with F_up = I, w from the upstream side and f_ref = rho_up
        """
        jump = self.normal_jump(up, strength)
        pair = self._assemble(up, frame, jump)
        entropy_jump = pair.down.s - pair.up.s
        if entropy_jump < -ENTROPY_TOL * max(1.0, abs(pair.up.s)):
            self.logger.warning(f"Rejected expansion shock: s_down - s_up = {entropy_jump:.3e}")
            raise ExpansionShockRejectedError(f"shock would lower the entropy by {-entropy_jump}")
        self.logger.debug(
            f"Solved {strength!r}: rho2/rho1 = {jump.rho2 / up.rho:.12g}, "
            f"p2 = {jump.p2:.12g}, u1 = {jump.u1:.12g}, u2 = {jump.u2:.12g}"
        )
        return pair

    def hugoniot_locus(
        self, up: FluidState, frame: SurfaceFrame, density_ratios: Sequence[float]
    ) -> List[HugoniotPoint]:
        """
        Sample the Hugoniot locus of ``up`` at the given density ratios.

        Args:
            up: Upstream state
            frame: Surface frame (orientation)
            density_ratios: Ratios rho2 / rho1 in (1, max compression)

        Returns:
            One HugoniotPoint (rho2, p2, u2, s2, implied D_n) per ratio
        """
        limit = self.eos.max_compression_ratio()
        points = []
        for ratio in density_ratios:
            if not 1.0 < ratio < limit:
                raise RatioOutOfRangeError(f"density ratio {ratio} outside (1, {limit})")
            pair = self.solve_downstream(up, frame, DownDensity(up.rho * ratio))
            points.append(
                HugoniotPoint(
                    rho2=pair.down.rho,
                    p2=pair.down.pressure(self.eos),
                    u2=pair.u_down,
                    s2=pair.down.s,
                    D_n=pair.frame.D_n,
                )
            )
        self.logger.info(f"Sampled {len(points)} Hugoniot points")
        return points

    def construct_crh2_pair(self, up: FluidState, frame: SurfaceFrame, rho2: float) -> ShockPair:
        """
        Downstream state satisfying every jump condition except normal momentum.

        Mass fixes u2 = rho1 u1 / rho2, the tangential velocity is kept and
        the energy condition fixes h2 = h1 + (u1^2 - u2^2) / 2, from which the
        entropy follows in closed form. [p + rho u^2] is left free.

        Args:
            up: Upstream state
            frame: Surface frame; u1 = n.v_up - D_n must be non-zero
            rho2: Downstream density

        Returns:
            ShockPair with the usual kinematic closure
        """
        u1 = frame.relative_velocity(up.v)
        if abs(u1) < CONTACT_THRESHOLD:
            raise ContactSurfaceError(f"relative velocity u = {u1!r} is a contact surface")
        if rho2 == up.rho:
            return ShockPair.from_states(up, up, frame)
        u2 = up.rho * u1 / rho2
        h2 = float(up.thermo(self.eos).h) + 0.5 * (u1**2 - u2**2)
        if not h2 > 0.0:
            raise EnthalpyUnreachableError(f"required downstream enthalpy {h2} is not positive")
        s2 = float(self.eos.entropy_from_enthalpy(rho2, h2))
        down = FluidState(rho=rho2, v=up.v + (u2 - u1) * frame.n, s=s2, omega=up.omega)
        return ShockPair.from_states(up, down, frame)


# ====================================================
# 🔧 FUNCTIONAL API
# ====================================================


def solve_downstream(
    up: FluidState, eos: Eos, frame: SurfaceFrame, strength: Strength
) -> ShockPair:
    return ShockSolver(eos).solve_downstream(up, frame, strength)


def hugoniot_locus(
    up: FluidState, eos: Eos, frame: SurfaceFrame, density_ratios: Sequence[float]
) -> List[HugoniotPoint]:
    return ShockSolver(eos).hugoniot_locus(up, frame, density_ratios)


def construct_crh2_pair(up: FluidState, eos: Eos, frame: SurfaceFrame, rho2: float) -> ShockPair:
    return ShockSolver(eos).construct_crh2_pair(up, frame, rho2)
