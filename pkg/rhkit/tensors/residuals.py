"""
Finite-difference residuals of the bulk equations on smooth fields.

For a field z -> (rho, v, s, Omega) the evaluator reports

    energy_res   = de/dt + div((e + p) v) - rho dOmega/dt
    momentum_res = d(rho v*)/dt + div(rho v v* + p I) + rho grad Omega
    thermo_res   = a + grad(h + Omega) - theta grad s,   a = dv/dt + (grad v) v
    entropy_res  = ds/dt + v . grad s
    mass_res     = drho/dt + div(rho v)

together with the covector F* - Div T. For any smooth field (solution or not)

    F* - Div T   = (energy_res, -momentum_res)
    momentum_res = rho thermo_res + mass_res v

up to the truncation error of the stencil.
"""

from dataclasses import dataclass
import logging
from typing import Dict, Optional, Sequence

import numpy as np
import pandas as pd

from rhkit.eos import Eos
from rhkit.errors import InvalidInputError, StencilOutOfDomainError
from rhkit.tensors.energy_momentum import body_force, energy_momentum_T
from rhkit.tensors.fields import SmoothField
from rhkit.utils import default_logger

# central-difference (offset, weight) pairs per order of accuracy
STENCILS = {
    2: ((-1, -0.5), (1, 0.5)),
    4: ((-2, 1.0 / 12.0), (-1, -2.0 / 3.0), (1, 2.0 / 3.0), (2, -1.0 / 12.0)),
}
DEFAULT_STEP = 1e-4


@dataclass(frozen=True)
class MotionResiduals:
    energy_res: float
    momentum_res: np.ndarray
    thermo_res: np.ndarray
    entropy_res: float
    mass_res: float

    def as_row(self) -> Dict[str, float]:
        row = {
            "energy_res": self.energy_res,
            "entropy_res": self.entropy_res,
            "mass_res": self.mass_res,
        }
        for k in range(3):
            row[f"momentum_res_{k + 1}"] = float(self.momentum_res[k])
            row[f"thermo_res_{k + 1}"] = float(self.thermo_res[k])
        return row


def _as_point(t: float, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise InvalidInputError(f"x must be a 3-vector, got shape {x.shape}")
    return np.concatenate(([float(t)], x))


class ResidualEvaluator:
    """Evaluates bulk-equation residuals of smooth fields by central differences."""

    def __init__(
        self,
        eos: Eos,
        step: float = DEFAULT_STEP,
        order: int = 2,
        logger: Optional[logging.Logger] = None,
    ):
        """
        Initialize ResidualEvaluator.

        Args:
            eos: Equation of state closing the fields
            step: Finite-difference step in every space-time direction
            order: Order of the central stencil (2 or 4)
            logger: Optional logger instance for tracking operations
        """
        if order not in STENCILS:
            raise InvalidInputError(f"stencil order must be in {sorted(STENCILS)}, got {order}")
        if not step > 0.0:
            raise InvalidInputError(f"step must be positive, got {step}")
        self.eos = eos
        self.step = step
        self.order = order
        self.logger = logger or default_logger(__name__)

    def _sample(self, field: SmoothField, z: np.ndarray) -> Dict[str, np.ndarray]:
        """Every differentiated quantity at one stencil node."""
        state = field.state(z)
        thermo = state.thermo(self.eos)
        rho, v, p = state.rho, state.v, float(thermo.p)
        e = rho * (0.5 * float(v @ v) + float(thermo.alpha) + state.omega)
        return {
            "rho": np.asarray(rho),
            "v": v,
            "s": np.asarray(state.s),
            "h": np.asarray(float(thermo.h)),
            "e": np.asarray(e),
            "energy_flux": (e + p) * v,
            "momentum": rho * v,
            "momentum_flux": rho * np.outer(v, v) + p * np.eye(3),
            "T": energy_momentum_T(state, self.eos).entries,
        }

    def _partials(self, field: SmoothField, z: np.ndarray) -> Sequence[Dict[str, np.ndarray]]:
        """Central differences of every sampled quantity along t, x1, x2, x3."""
        stencil = STENCILS[self.order]
        reach = max(abs(offset) for offset, _ in stencil) * self.step
        for axis in range(4):
            for sign in (-1.0, 1.0):
                node = z.copy()
                node[axis] += sign * reach
                if not field.contains(node):
                    raise StencilOutOfDomainError(
                        f"stencil node {node.tolist()} leaves the domain of field {field.name!r}"
                    )

        partials = []
        for axis in range(4):
            derivative: Dict[str, np.ndarray] = {}
            for offset, weight in stencil:
                node = z.copy()
                node[axis] += offset * self.step
                for name, value in self._sample(field, node).items():
                    contribution = weight * value / self.step
                    derivative[name] = derivative.get(name, 0.0) + contribution
            partials.append(derivative)
        return partials

    def motion_residuals(self, field: SmoothField, t: float, x) -> MotionResiduals:
        """
        Residuals of the energy, momentum, thermodynamic-form and entropy equations.

        Args:
            field: Smooth field
            t: Time of the query point
            x: Position of the query point

        Returns:
            MotionResiduals at (t, x)
        """
        z = _as_point(t, x)
        d = self._partials(field, z)
        state = field.state(z)
        thermo = state.thermo(self.eos)
        rho, v = state.rho, state.v
        grad_omega = field.potential_gradient(z)

        energy_res = float(d[0]["e"] + sum(d[k + 1]["energy_flux"][k] for k in range(3)))
        energy_res -= rho * grad_omega[0]

        momentum_res = d[0]["momentum"] + sum(d[k + 1]["momentum_flux"][k] for k in range(3))
        momentum_res = momentum_res + rho * grad_omega[1:]

        grad_s = np.array([float(d[k + 1]["s"]) for k in range(3)])
        grad_h = np.array([float(d[k + 1]["h"]) for k in range(3)])
        acceleration = d[0]["v"] + sum(v[k] * d[k + 1]["v"] for k in range(3))
        thermo_res = acceleration + grad_h + grad_omega[1:] - float(thermo.theta) * grad_s

        entropy_res = float(d[0]["s"]) + float(v @ grad_s)
        mass_res = float(d[0]["rho"] + sum(d[k + 1]["momentum"][k] for k in range(3)))

        return MotionResiduals(
            energy_res=energy_res,
            momentum_res=np.asarray(momentum_res, dtype=float),
            thermo_res=np.asarray(thermo_res, dtype=float),
            entropy_res=entropy_res,
            mass_res=mass_res,
        )

    def div_T_residual(self, field: SmoothField, t: float, x) -> np.ndarray:
        """Covector F* - Div T with (Div T)_j = sum_i dT[i, j]/dz_i."""
        z = _as_point(t, x)
        d = self._partials(field, z)
        div_T = sum(d[i]["T"][i, :] for i in range(4))
        grad_omega = field.potential_gradient(z)
        force = body_force(field.state(z), grad_omega[1:], domega_dt=grad_omega[0])
        return force - div_T

    def residual_table(
        self, field: SmoothField, points: Sequence[Sequence[float]]
    ) -> pd.DataFrame:
        """
        Residual table over a list of (t, x1, x2, x3) points.

        Returns:
            DataFrame with one row per point: coordinates, motion residuals,
            the four components of F* - Div T and the two equivalence gaps
        """
        rows = []
        for point in points:
            point = np.asarray(point, dtype=float)
            t, x = point[0], point[1:]
            residuals = self.motion_residuals(field, t, x)
            div_T = self.div_T_residual(field, t, x)
            rho = field.state(point).rho
            table_gap = div_T - np.concatenate(([residuals.energy_res], -residuals.momentum_res))
            thermo_gap = residuals.momentum_res - (
                rho * residuals.thermo_res + residuals.mass_res * field.state(point).v
            )
            row = {"t": t, "x1": x[0], "x2": x[1], "x3": x[2]}
            row.update(residuals.as_row())
            row.update({f"div_T_{j}": float(div_T[j]) for j in range(4)})
            row["table_gap"] = float(np.linalg.norm(table_gap))
            row["thermo_gap"] = float(np.linalg.norm(thermo_gap))
            rows.append(row)
        self.logger.info(f"Evaluated residuals of field {field.name!r} at {len(rows)} points")
        return pd.DataFrame(rows)


# ====================================================
# 🔧 FUNCTIONAL API
# ====================================================


def motion_residuals(
    field: SmoothField, eos: Eos, point, step: float = DEFAULT_STEP, order: int = 2
) -> MotionResiduals:
    """Motion residuals of ``field`` at ``point`` = (t, x1, x2, x3)."""
    point = np.asarray(point, dtype=float)
    evaluator = ResidualEvaluator(eos, step=step, order=order)
    return evaluator.motion_residuals(field, point[0], point[1:])


def div_T_residual(
    field: SmoothField, eos: Eos, point, step: float = DEFAULT_STEP, order: int = 2
) -> np.ndarray:
    """F* - Div T of ``field`` at ``point`` = (t, x1, x2, x3)."""
    point = np.asarray(point, dtype=float)
    evaluator = ResidualEvaluator(eos, step=step, order=order)
    return evaluator.div_T_residual(field, point[0], point[1:])


def convergence_order(
    field: SmoothField,
    eos: Eos,
    point,
    steps: Sequence[float] = (1e-2, 5e-3, 2.5e-3),
    order: int = 2,
) -> np.ndarray:
    """
    Observed convergence order of the energy-momentum residual of an exact solution.

    For an exact solution the residual is pure truncation error, so its norm
    scales like step^order.

    Returns:
        log(r_i / r_{i+1}) / log(h_i / h_{i+1}) for consecutive steps
    """
    norms = []
    for step in steps:
        residuals = motion_residuals(field, eos, point, step=step, order=order)
        stacked = np.concatenate(([residuals.energy_res], residuals.momentum_res))
        norms.append(np.linalg.norm(stacked))
    norms = np.asarray(norms)
    steps = np.asarray(steps, dtype=float)
    return np.log(norms[:-1] / norms[1:]) / np.log(steps[:-1] / steps[1:])
