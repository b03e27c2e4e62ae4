"""
Space-time kinematics: tangent maps, moving-surface frames and virtual displacement mapping.
"""

from .surface import (
    CONTACT_THRESHOLD,
    ReferenceFrame,
    SurfaceFrame,
    jump_deformation,
    relative_velocity,
    w_from_deformation,
)
from .tangent_map import (
    Motion4Velocity,
    TangentMap,
    assemble_tangent_map,
    decompose_tangent_map,
    map_variation,
    shock_adapted_maps,
    unmap_variation,
)

__all__ = [
    "CONTACT_THRESHOLD",
    "Motion4Velocity",
    "ReferenceFrame",
    "SurfaceFrame",
    "TangentMap",
    "assemble_tangent_map",
    "decompose_tangent_map",
    "jump_deformation",
    "map_variation",
    "relative_velocity",
    "shock_adapted_maps",
    "unmap_variation",
    "w_from_deformation",
]
