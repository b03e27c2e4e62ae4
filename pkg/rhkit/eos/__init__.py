"""
Equations of state: alpha(rho, s) and the thermodynamic quantities derived from it.
"""

from .equation_of_state import (
    Eos,
    EosConfig,
    EosKind,
    IdealGas,
    StiffenedGas,
    ThermoPoint,
    evaluate,
    gibbs_residual,
    load_eos,
    volume_curvature,
)

__all__ = [
    "Eos",
    "EosConfig",
    "EosKind",
    "IdealGas",
    "StiffenedGas",
    "ThermoPoint",
    "evaluate",
    "gibbs_residual",
    "load_eos",
    "volume_curvature",
]
