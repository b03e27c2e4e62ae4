"""
Seeded random shock ensembles for the equivalence and gap checks.

Case parameters are always drawn sequentially from one numpy generator, so
the ensemble is identical for a given seed whatever ``n_jobs`` is; joblib
only distributes the solves.
"""

from dataclasses import dataclass
import logging
from typing import List, Optional, Sequence, Tuple

from joblib import Parallel, delayed
import numpy as np

from rhkit.eos import Eos, IdealGas
from rhkit.kinematics import SurfaceFrame
from rhkit.shock.pair import ShockPair
from rhkit.shock.solver import Mach, ShockSolver
from rhkit.tensors import FluidState

logger = logging.getLogger(__name__)

GAMMA_RANGE = (1.1, 1.67)
MACH_RANGE = (1.0, 10.0)
PERTURBATION_RANGE = (1e-3, 1e-2)


@dataclass(frozen=True)
class ShockCase:
    gamma: float
    mach: float
    n: np.ndarray
    rho: float
    p: float
    v: np.ndarray


def _draw_case(rng: np.random.Generator) -> ShockCase:
    gamma = float(rng.uniform(*GAMMA_RANGE))
    # (1, 10]: the lower end is excluded
    mach = float(MACH_RANGE[1] - (MACH_RANGE[1] - MACH_RANGE[0]) * rng.uniform())
    direction = rng.normal(size=3)
    n = direction / np.linalg.norm(direction)
    rho = float(rng.uniform(0.5, 2.0))
    p = float(rng.uniform(0.5, 2.0))
    c = np.sqrt(gamma * p / rho)
    tangential = rng.normal(size=3)
    tangential -= (tangential @ n) * n
    tangential *= c * rng.uniform() / max(np.linalg.norm(tangential), 1e-300)
    v = tangential + c * rng.uniform(-2.0, 2.0) * n
    return ShockCase(gamma=gamma, mach=mach, n=n, rho=rho, p=p, v=v)


def _solve_case(case: ShockCase) -> Tuple[Eos, ShockPair]:
    eos = IdealGas(gamma=case.gamma)
    up = FluidState.from_pressure(case.rho, case.v, case.p, eos)
    solver = ShockSolver(eos, logger=logger)
    return eos, solver.solve_downstream(up, SurfaceFrame.from_direction(case.n), Mach(case.mach))


def random_admissible_shocks(
    seed: int = 0, count: int = 1000, n_jobs: Optional[int] = None
) -> List[Tuple[Eos, ShockPair]]:
    """
    Random admissible shocks in random 3-D orientations.

    gamma is uniform in [1.1, 1.67], the upstream Mach number in (1, 10], the
    normal isotropic, and the upstream state carries a random tangential
    velocity.

    Args:
        seed: Seed of the parameter generator
        count: Number of shocks
        n_jobs: joblib worker count (sequential when None)

    Returns:
        List of (eos, solved pair)
    """
    rng = np.random.default_rng(seed)
    cases = [_draw_case(rng) for _ in range(count)]
    results = Parallel(n_jobs=n_jobs)(delayed(_solve_case)(case) for case in cases)
    logger.info(f"Solved {len(results)} random shocks (seed={seed})")
    return results


def _perturb(eos: Eos, pair: ShockPair, delta: np.ndarray) -> ShockPair:
    down = pair.down
    c2 = down.sound_speed(eos)
    perturbed = FluidState.from_pressure(
        down.rho * (1.0 + delta[0]),
        down.v + c2 * delta[2:],
        down.pressure(eos) * (1.0 + delta[1]),
        eos,
        omega=down.omega,
    )
    return ShockPair.from_states(pair.up, perturbed, pair.frame, F_up=pair.F_up)


def perturbed_pairs(
    shocks: Sequence[Tuple[Eos, ShockPair]],
    seed: int = 1,
    magnitude: Tuple[float, float] = PERTURBATION_RANGE,
) -> List[Tuple[Eos, ShockPair]]:
    """
    Non-shock pairs obtained by perturbing the downstream state of solved shocks.

    The relative perturbation of (rho, p, v / c) has a random direction and a
    norm drawn uniformly from ``magnitude``.

    Args:
        shocks: Solved (eos, pair) list
        seed: Seed of the perturbation generator
        magnitude: Range of the perturbation norm

    Returns:
        List of (eos, perturbed pair)
    """
    rng = np.random.default_rng(seed)
    perturbed = []
    for eos, pair in shocks:
        direction = rng.normal(size=5)
        delta = rng.uniform(*magnitude) * direction / np.linalg.norm(direction)
        perturbed.append((eos, _perturb(eos, pair, delta)))
    return perturbed


def crh2_sweep(
    up: FluidState, eos: Eos, frame: SurfaceFrame, density_ratios: Sequence[float]
) -> List[ShockPair]:
    """Reference-variation counterexamples for a range of density ratios."""
    solver = ShockSolver(eos, logger=logger)
    return [solver.construct_crh2_pair(up, frame, up.rho * ratio) for ratio in density_ratios]
