"""
Exact Riemann solver for the 1-D gamma-law gas.

The star pressure solves f_L(p) + f_R(p) + (u_R - u_L) = 0 where f_K is the
velocity change across the K wave: a rarefaction for p <= p_K and a shock
otherwise. Shock branches come from the Rankine-Hugoniot solver of
:mod:`rhkit.shock`, so every shock the solver produces is an RH shock by
construction.

A wave whose star pressure equals the side pressure is a zero-strength
rarefaction: it has no shock speed and yields no shock pair.

Shock orientation: the left shock has n = (+1, 0, 0) and D_n = S_L; the
right shock has n = (-1, 0, 0) and D_n = -S_R, so that the outer state is
always upstream (u > 0).
"""

from dataclasses import dataclass
from enum import Enum
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import optimize

from rhkit.eos import Eos, EosKind
from rhkit.errors import (
    InvalidInputError,
    NoBracketError,
    RootNotBracketedError,
    UnsolvedInputError,
    UnsupportedEosError,
    VacuumFormationError,
)
from rhkit.kinematics import SurfaceFrame
from rhkit.shock import DownPressure, ShockPair, ShockSolver
from rhkit.shock.roots import find_upper_bracket
from rhkit.tensors import FluidState
from rhkit.utils import default_logger

FUNCTION_TOL = 1e-12
MAX_ITER = 200
# star pressure this many ulps from a side pressure is that pressure (zero-strength wave)
SNAP_ULPS = 8
LEFT_NORMAL = np.array([1.0, 0.0, 0.0])
RIGHT_NORMAL = np.array([-1.0, 0.0, 0.0])


class WaveKind(str, Enum):
    SHOCK = "shock"
    RAREFACTION = "rarefaction"


@dataclass(frozen=True)
class Primitive:
    rho: float
    u: float
    p: float


@dataclass(frozen=True)
class RiemannSolution:
    """Star state of a Riemann problem and the wave pattern around it."""

    p_star: float
    u_star: float
    wave_left: WaveKind
    wave_right: WaveKind
    densities: Tuple[float, float]
    left: Primitive
    right: Primitive
    gamma: float
    shock_speed_left: Optional[float] = None
    shock_speed_right: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "p_star": self.p_star,
            "u_star": self.u_star,
            "wave_left": self.wave_left.value,
            "wave_right": self.wave_right.value,
            "rho_star_left": self.densities[0],
            "rho_star_right": self.densities[1],
            "shock_speed_left": self.shock_speed_left,
            "shock_speed_right": self.shock_speed_right,
        }


class ExactRiemannSolver:
    """Exact solution of the 1-D Riemann problem for an ideal gas."""

    def __init__(
        self,
        eos: Eos,
        ftol: float = FUNCTION_TOL,
        max_iter: int = MAX_ITER,
        logger: Optional[logging.Logger] = None,
    ):
        """
        Initialize ExactRiemannSolver.

        Args:
            eos: Ideal-gas equation of state
            ftol: Tolerance on the star-pressure function
            max_iter: Maximum number of bisection steps
            logger: Optional logger instance for tracking operations
        """
        if eos.kind is not EosKind.IDEAL_GAS:
            raise UnsupportedEosError(
                f"exact Riemann solver needs an ideal gas, got {eos.kind.value}"
            )
        self.eos = eos
        self.gamma = eos.gamma
        self.ftol = ftol
        self.max_iter = max_iter
        self.logger = logger or default_logger(__name__)
        self.shock_solver = ShockSolver(eos, logger=self.logger)

    # ----------------------------------------------------------------
    # star state
    # ----------------------------------------------------------------
    def _primitive(self, state: FluidState) -> Primitive:
        if np.any(state.v[1:] != 0.0):
            raise InvalidInputError(f"Riemann states must be 1-D, got v = {state.v.tolist()}")
        return Primitive(rho=state.rho, u=float(state.v[0]), p=state.pressure(self.eos))

    def _wave_function(self, state: FluidState, p: float) -> float:
        """Velocity change across the wave bounding ``state`` for star pressure p."""
        p_side = state.pressure(self.eos)
        if p <= p_side:
            g = self.gamma
            c = state.sound_speed(self.eos)
            return 2.0 * c / (g - 1.0) * ((p / p_side) ** ((g - 1.0) / (2.0 * g)) - 1.0)
        jump = self.shock_solver.normal_jump(state, DownPressure(p))
        return jump.u1 - jump.u2

    def solve_star(self, left: FluidState, right: FluidState) -> RiemannSolution:
        """
        Solve for the star-region pressure and velocity.

        Args:
            left: Left state, v = (u, 0, 0)
            right: Right state, v = (u, 0, 0)

        Returns:
            RiemannSolution
        """
        g = self.gamma
        prim_l, prim_r = self._primitive(left), self._primitive(right)
        c_l, c_r = left.sound_speed(self.eos), right.sound_speed(self.eos)
        du = prim_r.u - prim_l.u
        if du >= 2.0 * (c_l + c_r) / (g - 1.0):
            raise VacuumFormationError(
                f"velocity difference {du} opens a vacuum (limit {2.0 * (c_l + c_r) / (g - 1.0)})"
            )

        def pressure_function(p):
            return self._wave_function(left, p) + self._wave_function(right, p) + du

        p_low = 1e-14 * min(prim_l.p, prim_r.p)
        try:
            p_high = find_upper_bracket(pressure_function, p_low, max(prim_l.p, prim_r.p))
            p_star = optimize.bisect(
                pressure_function,
                p_low,
                p_high,
                xtol=1e-300,
                rtol=4.0 * np.finfo(float).eps,
                maxiter=self.max_iter,
            )
        except (RootNotBracketedError, ValueError) as exc:
            raise NoBracketError(f"star pressure not bracketed: {exc}") from exc
        for prim in (prim_l, prim_r):
            if abs(p_star - prim.p) <= SNAP_ULPS * np.finfo(float).eps * prim.p:
                self.logger.debug(f"Star pressure within rounding of p = {prim.p:.17g}, snapped")
                p_star = prim.p
        residual = pressure_function(p_star)
        if abs(residual) > self.ftol * max(1.0, c_l + c_r):
            raise NoBracketError(f"star pressure function residual {residual:.3e} above tolerance")

        f_l, f_r = self._wave_function(left, p_star), self._wave_function(right, p_star)
        u_star = 0.5 * (prim_l.u + prim_r.u) + 0.5 * (f_r - f_l)

        densities, kinds, speeds = [], [], []
        for state, prim, normal in ((left, prim_l, LEFT_NORMAL), (right, prim_r, RIGHT_NORMAL)):
            if p_star > prim.p:
                jump = self.shock_solver.normal_jump(state, DownPressure(p_star))
                densities.append(jump.rho2)
                kinds.append(WaveKind.SHOCK)
                # D_n = n.v - u1 and the shock velocity along x is n_x D_n
                speeds.append(normal[0] * (normal[0] * prim.u - jump.u1))
            else:
                densities.append(prim.rho * (p_star / prim.p) ** (1.0 / g))
                kinds.append(WaveKind.RAREFACTION)
                speeds.append(None)

        solution = RiemannSolution(
            p_star=float(p_star),
            u_star=float(u_star),
            wave_left=kinds[0],
            wave_right=kinds[1],
            densities=(float(densities[0]), float(densities[1])),
            left=prim_l,
            right=prim_r,
            gamma=g,
            shock_speed_left=speeds[0],
            shock_speed_right=speeds[1],
        )
        self.logger.info(
            f"Star state p* = {solution.p_star:.10g}, u* = {solution.u_star:.10g} "
            f"({kinds[0].value}, {kinds[1].value})"
        )
        return solution

    # ----------------------------------------------------------------
    # sampling
    # ----------------------------------------------------------------
    def _check_solution(self, sol: Optional[RiemannSolution], left: FluidState, right: FluidState):
        if sol is None:
            raise UnsolvedInputError("Riemann problem has not been solved")
        if sol.gamma != self.gamma or (
            sol.left != self._primitive(left) or sol.right != self._primitive(right)
        ):
            raise UnsolvedInputError("solution does not belong to these left/right states")

    def _state(self, rho: float, u: float, p: float) -> FluidState:
        return FluidState.from_pressure(rho, [u, 0.0, 0.0], p, self.eos)

    def sample(
        self, sol: RiemannSolution, left: FluidState, right: FluidState, xi: float
    ) -> FluidState:
        """
        Self-similar solution at xi = x / t.

        Args:
            sol: Solution returned by :meth:`solve_star` for the same states
            left: Left state
            right: Right state
            xi: Similarity coordinate

        Returns:
            FluidState at xi
        """
        self._check_solution(sol, left, right)
        g = self.gamma
        p_star, u_star = sol.p_star, sol.u_star

        if xi <= u_star:
            prim, c = sol.left, left.sound_speed(self.eos)
            if sol.wave_left is WaveKind.SHOCK:
                if xi < sol.shock_speed_left:
                    return left
                return self._state(sol.densities[0], u_star, p_star)
            c_star = c * (p_star / prim.p) ** ((g - 1.0) / (2.0 * g))
            if xi < prim.u - c:
                return left
            if xi > u_star - c_star:
                return self._state(sol.densities[0], u_star, p_star)
            u = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * prim.u + xi)
            c_fan = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * (prim.u - xi))
        else:
            prim, c = sol.right, right.sound_speed(self.eos)
            if sol.wave_right is WaveKind.SHOCK:
                if xi > sol.shock_speed_right:
                    return right
                return self._state(sol.densities[1], u_star, p_star)
            c_star = c * (p_star / prim.p) ** ((g - 1.0) / (2.0 * g))
            if xi > prim.u + c:
                return right
            if xi < u_star + c_star:
                return self._state(sol.densities[1], u_star, p_star)
            u = 2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * prim.u + xi)
            c_fan = 2.0 / (g + 1.0) * (c - 0.5 * (g - 1.0) * (prim.u - xi))

        rho = prim.rho * (c_fan / c) ** (2.0 / (g - 1.0))
        p = prim.p * (c_fan / c) ** (2.0 * g / (g - 1.0))
        return self._state(rho, u, p)

    def sample_grid(
        self,
        sol: RiemannSolution,
        left: FluidState,
        right: FluidState,
        x: Sequence[float],
        t: float,
        x0: float = 0.5,
    ) -> pd.DataFrame:
        """
        Sample the solution at time t on the points x (diaphragm at x0).

        Returns:
            DataFrame with columns x, rho, u, p, s
        """
        if not t > 0.0:
            raise InvalidInputError(f"sampling time must be positive, got {t}")
        rows = []
        for position in np.asarray(x, dtype=float):
            state = self.sample(sol, left, right, (position - x0) / t)
            rows.append(
                {
                    "x": float(position),
                    "rho": state.rho,
                    "u": float(state.v[0]),
                    "p": state.pressure(self.eos),
                    "s": state.s,
                }
            )
        return pd.DataFrame(rows, columns=["x", "rho", "u", "p", "s"])

    def shock_pairs(
        self, sol: RiemannSolution, left: FluidState, right: FluidState
    ) -> List[ShockPair]:
        """Upstream/star pair of every shock wave of the solution."""
        self._check_solution(sol, left, right)
        pairs = []
        if sol.wave_left is WaveKind.SHOCK:
            star = self._state(sol.densities[0], sol.u_star, sol.p_star)
            frame = SurfaceFrame(n=LEFT_NORMAL, D_n=sol.shock_speed_left)
            pairs.append(ShockPair.from_states(left, star, frame))
        if sol.wave_right is WaveKind.SHOCK:
            star = self._state(sol.densities[1], sol.u_star, sol.p_star)
            frame = SurfaceFrame(n=RIGHT_NORMAL, D_n=-sol.shock_speed_right)
            pairs.append(ShockPair.from_states(right, star, frame))
        return pairs


# ====================================================
# 🔧 FUNCTIONAL API
# ====================================================


def solve_star(left: FluidState, right: FluidState, eos: Eos) -> RiemannSolution:
    return ExactRiemannSolver(eos).solve_star(left, right)


def sample(sol: RiemannSolution, left: FluidState, right: FluidState, eos: Eos, xi: float):
    return ExactRiemannSolver(eos).sample(sol, left, right, xi)
