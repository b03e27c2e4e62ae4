"""
Rankine-Hugoniot conditions, variational surface terms and downstream-state solving.
"""

from .conditions import (
    LaxReport,
    RHResiduals,
    contact_conditions,
    det_jump_identity,
    disFF_residual,
    lax_admissible,
    rank_one_det_residual,
    reference_surface_term,
    rh_residuals,
    spacetime_surface_term,
    variation_jump,
)
from .pair import ShockPair
from .solver import (
    DownDensity,
    DownPressure,
    HugoniotPoint,
    Mach,
    ShockSolver,
    Strength,
    construct_crh2_pair,
    hugoniot_locus,
    solve_downstream,
)
from .sweeps import crh2_sweep, perturbed_pairs, random_admissible_shocks

__all__ = [
    "DownDensity",
    "DownPressure",
    "HugoniotPoint",
    "LaxReport",
    "Mach",
    "RHResiduals",
    "ShockPair",
    "ShockSolver",
    "Strength",
    "construct_crh2_pair",
    "contact_conditions",
    "crh2_sweep",
    "det_jump_identity",
    "disFF_residual",
    "hugoniot_locus",
    "lax_admissible",
    "perturbed_pairs",
    "random_admissible_shocks",
    "rank_one_det_residual",
    "reference_surface_term",
    "rh_residuals",
    "solve_downstream",
    "spacetime_surface_term",
    "variation_jump",
]
