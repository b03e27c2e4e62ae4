"""
Equation-of-state layer.

The fluid is described by its specific internal energy alpha(rho, s); every
other thermodynamic quantity (pressure, enthalpy, temperature, sound speed)
is derived from it:

    p = rho^2 d(alpha)/d(rho),   h = alpha + p / rho,   theta = d(alpha)/ds

Two closed-form families are provided. Both are gamma-laws in (rho, s):

    IdealGas:      alpha = K rho^(gamma-1) exp(s/c_v) / (gamma-1)
    StiffenedGas:  alpha = K rho^(gamma-1) exp(s/c_v) / (gamma-1) + p_inf / rho

The stiffened gas shifts the pressure by p_inf rather than scaling it:

    p = K rho^gamma exp(s/c_v) - p_inf = (gamma-1) rho alpha - gamma p_inf
    c^2 = gamma (p + p_inf) / rho

so p may be negative while c^2 stays positive.

All quantities are nondimensional. Methods accept scalars or numpy arrays.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Annotated, ClassVar, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter
import yaml

from rhkit.errors import InvalidInputError, NonPositiveDensityError, SoundSpeedUndefinedError


class EosKind(str, Enum):
    IDEAL_GAS = "ideal_gas"
    STIFFENED_GAS = "stiffened_gas"


@dataclass(frozen=True)
class ThermoPoint:
    """Thermodynamic quantities evaluated at one (rho, s) point (or arrays of points)."""

    alpha: float
    p: float
    h: float
    theta: float
    c2: float


@dataclass(frozen=True)
class Eos(ABC):
    """Abstract equation of state alpha(rho, s)."""

    gamma: float = 1.4
    c_v: float = 1.0
    K: float = 1.0

    kind: ClassVar[EosKind]

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise InvalidInputError(f"gamma must be > 1, got {self.gamma}")
        if not self.c_v > 0.0:
            raise InvalidInputError(f"c_v must be > 0, got {self.c_v}")
        if not self.K > 0.0:
            raise InvalidInputError(f"K must be > 0, got {self.K}")

    # ----------------------------------------------------------------
    # closed forms
    # ----------------------------------------------------------------
    @abstractmethod
    def alpha(self, rho, s):
        """Specific internal energy."""

    @abstractmethod
    def pressure(self, rho, s):
        """Pressure p = rho^2 d(alpha)/d(rho)."""

    @abstractmethod
    def enthalpy(self, rho, s):
        """Specific enthalpy h = alpha + p / rho."""

    @abstractmethod
    def temperature(self, rho, s):
        """Kelvin temperature theta = d(alpha)/ds."""

    @abstractmethod
    def sound_speed_squared(self, rho, s):
        """Squared sound speed dp/d(rho) at fixed s."""

    @abstractmethod
    def entropy_from_pressure(self, rho, p):
        """Specific entropy of the state with density rho and pressure p."""

    @abstractmethod
    def entropy_from_enthalpy(self, rho, h):
        """Specific entropy of the state with density rho and enthalpy h."""

    @abstractmethod
    def enthalpy_from_pressure(self, rho, p):
        """Caloric form h(rho, p)."""

    def max_compression_ratio(self) -> float:
        """Strong-shock density ratio limit (gamma + 1) / (gamma - 1)."""
        return (self.gamma + 1.0) / (self.gamma - 1.0)

    def evaluate(self, rho, s) -> ThermoPoint:
        """
        Evaluate all thermodynamic quantities at (rho, s).

        Args:
            rho: Mass density (> 0)
            s: Specific entropy

        Returns:
            ThermoPoint with alpha, p, h, theta and c2
        """
        _check_density(rho)
        alpha = self.alpha(rho, s)
        p = self.pressure(rho, s)
        # identity of construction, kept exact
        h = alpha + p / np.asarray(rho, dtype=float)
        theta = self.temperature(rho, s)
        c2 = self.sound_speed_squared(rho, s)
        if not np.all(c2 > 0.0):
            raise SoundSpeedUndefinedError(f"c^2 <= 0 at rho={rho}, s={s}")
        return ThermoPoint(alpha=alpha, p=p, h=h, theta=theta, c2=c2)

    def sound_speed(self, rho, s):
        return np.sqrt(self.evaluate(rho, s).c2)

    def to_dict(self) -> dict:
        data = {"kind": self.kind.value, "gamma": self.gamma, "c_v": self.c_v, "K": self.K}
        if self.kind is EosKind.STIFFENED_GAS:
            data["p_inf"] = self.reference_pressure
        return data

    @staticmethod
    def from_dict(data: dict) -> "Eos":
        """Build an EOS from its JSON/YAML description (unknown keys rejected)."""
        config = _EOS_ADAPTER.validate_python(data)
        params = config.model_dump(exclude={"kind"})
        if config.kind == EosKind.STIFFENED_GAS.value:
            return StiffenedGas(**params)
        return IdealGas(**params)

    @property
    def reference_pressure(self) -> float:
        """Pressure shift p_inf of the isentropes (0 for an ideal gas)."""
        return 0.0


@dataclass(frozen=True)
class _GammaLawEos(Eos):
    """Closed forms shared by the gamma-law family, shifted by ``reference_pressure``."""

    def _isentropic_scale(self, rho, s):
        # K rho^(gamma-1) exp(s/c_v), common factor of every closed form
        rho = np.asarray(rho, dtype=float)
        return self.K * np.power(rho, self.gamma - 1.0) * np.exp(np.asarray(s) / self.c_v)

    def alpha(self, rho, s):
        rho = np.asarray(rho, dtype=float)
        return self._isentropic_scale(rho, s) / (self.gamma - 1.0) + self.reference_pressure / rho

    def pressure(self, rho, s):
        rho = np.asarray(rho, dtype=float)
        return rho * self._isentropic_scale(rho, s) - self.reference_pressure

    def enthalpy(self, rho, s):
        return self.gamma * self._isentropic_scale(rho, s) / (self.gamma - 1.0)

    def temperature(self, rho, s):
        return self._isentropic_scale(rho, s) / ((self.gamma - 1.0) * self.c_v)

    def sound_speed_squared(self, rho, s):
        return self.gamma * self._isentropic_scale(rho, s)

    def entropy_from_pressure(self, rho, p):
        _check_density(rho)
        shifted = np.asarray(p, dtype=float) + self.reference_pressure
        if not np.all(shifted > 0.0):
            raise SoundSpeedUndefinedError(f"p + p_inf must be positive, got p={p}")
        rho = np.asarray(rho, dtype=float)
        return self.c_v * np.log(shifted / (self.K * np.power(rho, self.gamma)))

    def entropy_from_enthalpy(self, rho, h):
        _check_density(rho)
        h = np.asarray(h, dtype=float)
        # c^2 = (gamma - 1) h for the whole family
        if not np.all(h > 0.0):
            raise SoundSpeedUndefinedError(f"enthalpy must be positive, got h={h}")
        rho = np.asarray(rho, dtype=float)
        scale = (self.gamma - 1.0) * h / self.gamma
        return self.c_v * np.log(scale / (self.K * np.power(rho, self.gamma - 1.0)))

    def enthalpy_from_pressure(self, rho, p):
        _check_density(rho)
        return (
            self.gamma
            * (np.asarray(p, dtype=float) + self.reference_pressure)
            / ((self.gamma - 1.0) * np.asarray(rho, dtype=float))
        )


@dataclass(frozen=True)
class IdealGas(_GammaLawEos):
    """Polytropic gas alpha = K rho^(gamma-1) exp(s/c_v) / (gamma-1)."""

    kind: ClassVar[EosKind] = EosKind.IDEAL_GAS


@dataclass(frozen=True)
class StiffenedGas(_GammaLawEos):
    """
    Stiffened gas: the ideal-gas isentropes shifted by a reference pressure.

    p = K rho^gamma exp(s/c_v) - p_inf, i.e. p = (gamma - 1) rho alpha - gamma p_inf.
    """

    p_inf: float = 0.0

    kind: ClassVar[EosKind] = EosKind.STIFFENED_GAS

    def __post_init__(self):
        super().__post_init__()
        if not self.p_inf >= 0.0:
            raise InvalidInputError(f"p_inf must be >= 0, got {self.p_inf}")

    @property
    def reference_pressure(self) -> float:
        return self.p_inf


# ====================================================
# 📋 CONFIG SCHEMA
# ====================================================


class IdealGasConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["ideal_gas"] = "ideal_gas"
    gamma: float = Field(1.4, gt=1.0, description="Ratio of specific heats")
    c_v: float = Field(1.0, gt=0.0, description="Specific heat at constant volume")
    K: float = Field(1.0, gt=0.0, description="Entropy-reference scale")


class StiffenedGasConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["stiffened_gas"]
    gamma: float = Field(1.4, gt=1.0)
    c_v: float = Field(1.0, gt=0.0)
    K: float = Field(1.0, gt=0.0)
    p_inf: float = Field(0.0, ge=0.0, description="Stiffening reference pressure")


EosConfig = Annotated[Union[IdealGasConfig, StiffenedGasConfig], Field(discriminator="kind")]
_EOS_ADAPTER = TypeAdapter(EosConfig)


def load_eos(path: str) -> Eos:
    """
    Load an EOS description from a JSON or YAML file.

    Args:
        path: Path to the EOS file

    Returns:
        Eos instance
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"EOS file not found: {path}")
    with open(path, "r", encoding="utf-8") as file:
        data = yaml.safe_load(file)
    return Eos.from_dict(data)


# ====================================================
# 🔧 OPERATIONS
# ====================================================


def _check_density(rho):
    if not np.all(np.asarray(rho) > 0.0):
        raise NonPositiveDensityError(f"density must be positive, got {rho}")


def evaluate(eos: Eos, rho, s) -> ThermoPoint:
    """Functional alias of :meth:`Eos.evaluate`."""
    return eos.evaluate(rho, s)


def gibbs_residual(eos: Eos, rho, s, drho, ds):
    """
    Residual of the Gibbs identity dh = theta ds + dp / rho.

    The increments are taken symmetrically around (rho, s) and the
    coefficients evaluated at the centre, so the residual is third order in
    the increment size.

    Returns:
        |delta h - theta delta s - delta p / rho|
    """
    _check_density(rho)
    lower = eos.evaluate(rho - 0.5 * drho, s - 0.5 * ds)
    upper = eos.evaluate(rho + 0.5 * drho, s + 0.5 * ds)
    centre = eos.evaluate(rho, s)
    return np.abs((upper.h - lower.h) - centre.theta * ds - (upper.p - lower.p) / rho)


def volume_curvature(eos: Eos, rho, s, step: float = 1e-4):
    """
    Second derivative of alpha in the specific volume 1/rho at fixed s.

    Strict convexity of alpha in 1/rho means this is positive everywhere in
    the admissible domain.
    """
    _check_density(rho)
    tau = 1.0 / np.asarray(rho, dtype=float)
    dtau = step * tau
    plus = eos.alpha(1.0 / (tau + dtau), s)
    minus = eos.alpha(1.0 / (tau - dtau), s)
    return (plus - 2.0 * eos.alpha(rho, s) + minus) / dtau**2
