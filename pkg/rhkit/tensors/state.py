"""
Pointwise fluid state.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from rhkit.eos import Eos, ThermoPoint
from rhkit.errors import InvalidInputError, NonPositiveDensityError


@dataclass(frozen=True)
class FluidState:
    """
    Mass density, velocity, specific entropy and body-force potential at a point.

    Thermodynamic quantities are never stored; they are derived through an
    :class:`~rhkit.eos.Eos` on demand.
    """

    rho: float
    v: np.ndarray = field(default_factory=lambda: np.zeros(3))
    s: float = 0.0
    omega: float = 0.0

    def __post_init__(self):
        rho = float(self.rho)
        if not rho > 0.0:
            raise NonPositiveDensityError(f"density must be positive, got {rho}")
        v = np.asarray(self.v, dtype=float)
        if v.shape != (3,):
            raise InvalidInputError(f"velocity must be a 3-vector, got shape {v.shape}")
        if not (np.all(np.isfinite(v)) and np.isfinite(self.s) and np.isfinite(self.omega)):
            raise InvalidInputError("state has non-finite entries")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "omega", float(self.omega))

    @classmethod
    def from_pressure(cls, rho, v, p, eos: Eos, omega: float = 0.0) -> "FluidState":
        """Build a state from (rho, v, p) data, solving the EOS for the entropy."""
        return cls(rho=rho, v=v, s=float(eos.entropy_from_pressure(rho, p)), omega=omega)

    def thermo(self, eos: Eos) -> ThermoPoint:
        return eos.evaluate(self.rho, self.s)

    def pressure(self, eos: Eos) -> float:
        return float(eos.pressure(self.rho, self.s))

    def sound_speed(self, eos: Eos) -> float:
        return float(eos.sound_speed(self.rho, self.s))

    def m(self, eos: Eos) -> float:
        """Derivative of the Lagrangian in rho: m = |v|^2 / 2 - h - Omega."""
        return 0.5 * float(self.v @ self.v) - float(self.thermo(eos).h) - self.omega

    def with_velocity(self, v) -> "FluidState":
        return replace(self, v=np.asarray(v, dtype=float))

    def to_dict(self) -> dict:
        return {"rho": self.rho, "v": self.v.tolist(), "s": self.s, "omega": self.omega}
