"""
Energy-momentum tensors, force covectors and finite-difference residuals of the bulk equations.
"""

from .energy_momentum import (
    SpaceTimeTensor,
    body_force,
    energy_density,
    energy_momentum_T,
    lagrangian_density,
    lagrangian_gradient,
    reference_tensor_from_lagrangian,
    reference_tensor_T0,
    spacetime_tensor_from_lagrangian,
)
from .fields import BUILTIN_FIELDS, FieldSpec, SmoothField, builtin_field, load_field_spec
from .residuals import (
    MotionResiduals,
    ResidualEvaluator,
    convergence_order,
    div_T_residual,
    motion_residuals,
)
from .state import FluidState

__all__ = [
    "BUILTIN_FIELDS",
    "FieldSpec",
    "FluidState",
    "MotionResiduals",
    "ResidualEvaluator",
    "SmoothField",
    "SpaceTimeTensor",
    "body_force",
    "builtin_field",
    "convergence_order",
    "div_T_residual",
    "energy_density",
    "energy_momentum_T",
    "lagrangian_density",
    "lagrangian_gradient",
    "load_field_spec",
    "motion_residuals",
    "reference_tensor_T0",
    "reference_tensor_from_lagrangian",
    "spacetime_tensor_from_lagrangian",
]
