"""
Exception hierarchy for rhkit.

Every physics or domain failure raised by the library derives from
:class:`RHKitError`, which carries the name of the originating module so the
command-line front end can report it as a JSON error object.
"""

from typing import Dict


class RHKitError(ValueError):
    """Base class for physics/domain errors."""

    module = "rhkit"

    @property
    def error_name(self) -> str:
        return type(self).__name__.removesuffix("Error")

    def to_dict(self) -> Dict[str, str]:
        return {"name": self.error_name, "module": self.module, "message": str(self)}


class InvalidInputError(RHKitError):
    """Malformed state, field, EOS or configuration data."""


# ----------------------------------------------------------------
# eos
# ----------------------------------------------------------------
class NonPositiveDensityError(RHKitError):
    module = "eos"


class SoundSpeedUndefinedError(RHKitError):
    module = "eos"


# ----------------------------------------------------------------
# kinematics
# ----------------------------------------------------------------
class DegenerateParametrizationError(RHKitError):
    module = "kinematics"


class ZeroRelativeVelocityError(RHKitError):
    module = "kinematics"


class SingularTangentMapError(RHKitError):
    module = "kinematics"


# ----------------------------------------------------------------
# tensors
# ----------------------------------------------------------------
class StencilOutOfDomainError(RHKitError):
    module = "tensors"


class NonPositiveReferenceDensityError(RHKitError):
    module = "tensors"


# ----------------------------------------------------------------
# shock
# ----------------------------------------------------------------
class ContactSurfaceError(RHKitError):
    module = "shock"


class NotSupersonicError(RHKitError):
    module = "shock"


class ExpansionShockRejectedError(RHKitError):
    module = "shock"


class RootNotBracketedError(RHKitError):
    module = "shock"


class RatioOutOfRangeError(RHKitError):
    module = "shock"


class EnthalpyUnreachableError(RHKitError):
    module = "shock"


class SingularFError(RHKitError):
    module = "shock"


# ----------------------------------------------------------------
# riemann
# ----------------------------------------------------------------
class VacuumFormationError(RHKitError):
    module = "riemann"


class NoBracketError(RHKitError):
    module = "riemann"


class UnsolvedInputError(RHKitError):
    module = "riemann"


class UnsupportedEosError(RHKitError):
    module = "riemann"
