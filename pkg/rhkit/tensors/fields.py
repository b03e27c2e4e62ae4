"""
Smooth space-time fields used to exercise the bulk equations.

A field maps z = (t, x1, x2, x3) to a :class:`FluidState`; the body-force
potential Omega is supplied analytically together with its gradient so the
residuals never differentiate it numerically.

Fields are either built-in manufactured fields or read from a JSON/YAML
spec where every scalar (rho, the three velocity components, s, Omega) is a
sum of a constant, monomials and sine waves:

    {"rho": {"constant": 1.0, "trig": [{"amplitude": 0.1, "wavenumber": [0, 1, 0, 0]}]},
     "v": [{"constant": 0.2}, {}, {}]}
"""

from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
import yaml

from rhkit.eos import Eos, IdealGas
from rhkit.errors import InvalidInputError
from rhkit.tensors.state import FluidState

BUILTIN_FIELDS = ("constant", "translation", "density_wave", "simple_wave", "trig_mix")


# ====================================================
# 📋 FIELD SPEC SCHEMA
# ====================================================


class PolynomialTerm(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coefficient: float
    powers: Tuple[int, int, int, int] = Field(..., description="Exponents of (t, x1, x2, x3)")

    def value(self, z: np.ndarray) -> float:
        return self.coefficient * float(np.prod(np.power(z, self.powers)))

    def gradient(self, z: np.ndarray) -> np.ndarray:
        grad = np.zeros(4)
        for axis, power in enumerate(self.powers):
            if power == 0:
                continue
            lowered = list(self.powers)
            lowered[axis] -= 1
            grad[axis] = self.coefficient * power * float(np.prod(np.power(z, lowered)))
        return grad


class TrigTerm(BaseModel):
    model_config = ConfigDict(extra="forbid")

    amplitude: float
    wavenumber: Tuple[float, float, float, float] = Field(..., description="(k_t, k_1, k_2, k_3)")
    phase: float = 0.0

    def value(self, z: np.ndarray) -> float:
        return self.amplitude * np.sin(np.dot(self.wavenumber, z) + self.phase)

    def gradient(self, z: np.ndarray) -> np.ndarray:
        k = np.asarray(self.wavenumber, dtype=float)
        return self.amplitude * np.cos(np.dot(k, z) + self.phase) * k


class ScalarExpression(BaseModel):
    """constant + sum of monomials + sum of sine waves in z = (t, x)."""

    model_config = ConfigDict(extra="forbid")

    constant: float = 0.0
    polynomial: List[PolynomialTerm] = Field(default_factory=list)
    trig: List[TrigTerm] = Field(default_factory=list)

    def value(self, z) -> float:
        z = np.asarray(z, dtype=float)
        terms = [term.value(z) for term in self.polynomial] + [term.value(z) for term in self.trig]
        return self.constant + float(sum(terms))

    def gradient(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        grad = np.zeros(4)
        for term in self.polynomial:
            grad += term.gradient(z)
        for term in self.trig:
            grad += term.gradient(z)
        return grad


class FieldSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = "custom"
    rho: ScalarExpression
    v: Tuple[ScalarExpression, ScalarExpression, ScalarExpression] = Field(
        default_factory=lambda: (ScalarExpression(), ScalarExpression(), ScalarExpression())
    )
    s: ScalarExpression = Field(default_factory=ScalarExpression)
    omega: ScalarExpression = Field(default_factory=ScalarExpression)
    lower: Optional[Tuple[float, float, float, float]] = None
    upper: Optional[Tuple[float, float, float, float]] = None


# ====================================================
# 🔧 FIELD
# ====================================================


class SmoothField:
    """Space-time field z -> (rho, v, s, Omega) on an optional box domain."""

    def __init__(
        self,
        name: str,
        state_fn: Callable[[np.ndarray], Tuple[float, Sequence[float], float]],
        omega_fn: Optional[Callable[[np.ndarray], float]] = None,
        omega_gradient_fn: Optional[Callable[[np.ndarray], np.ndarray]] = None,
        lower: Optional[Sequence[float]] = None,
        upper: Optional[Sequence[float]] = None,
    ):
        """
        Initialize SmoothField.

        Args:
            name: Field name used in reports
            state_fn: z -> (rho, v, s)
            omega_fn: z -> Omega (zero potential when omitted)
            omega_gradient_fn: z -> (dOmega/dt, grad Omega), required with omega_fn
            lower: Lower corner of the domain box in (t, x1, x2, x3)
            upper: Upper corner of the domain box in (t, x1, x2, x3)
        """
        if (omega_fn is None) != (omega_gradient_fn is None):
            raise InvalidInputError("Omega and its gradient must be supplied together")
        self.name = name
        self._state_fn = state_fn
        self._omega_fn = omega_fn
        self._omega_gradient_fn = omega_gradient_fn
        self.lower = np.full(4, -np.inf) if lower is None else np.asarray(lower, dtype=float)
        self.upper = np.full(4, np.inf) if upper is None else np.asarray(upper, dtype=float)

    def __repr__(self) -> str:
        return f"SmoothField(name={self.name!r})"

    def contains(self, z) -> bool:
        z = np.asarray(z, dtype=float)
        return bool(np.all(z >= self.lower) and np.all(z <= self.upper))

    def omega(self, z) -> float:
        return 0.0 if self._omega_fn is None else float(self._omega_fn(np.asarray(z, dtype=float)))

    def potential_gradient(self, z) -> np.ndarray:
        """(dOmega/dt, dOmega/dx1, dOmega/dx2, dOmega/dx3) at z."""
        if self._omega_gradient_fn is None:
            return np.zeros(4)
        return np.asarray(self._omega_gradient_fn(np.asarray(z, dtype=float)), dtype=float)

    def state(self, z) -> FluidState:
        z = np.asarray(z, dtype=float)
        rho, v, s = self._state_fn(z)
        return FluidState(rho=rho, v=v, s=s, omega=self.omega(z))

    def __call__(self, t: float, x) -> FluidState:
        return self.state(np.concatenate(([t], np.asarray(x, dtype=float))))

    @classmethod
    def from_spec(cls, spec: FieldSpec) -> "SmoothField":
        """Build a field from a validated :class:`FieldSpec`."""

        def state_fn(z):
            return spec.rho.value(z), [component.value(z) for component in spec.v], spec.s.value(z)

        return cls(
            name=spec.name,
            state_fn=state_fn,
            omega_fn=spec.omega.value,
            omega_gradient_fn=spec.omega.gradient,
            lower=spec.lower,
            upper=spec.upper,
        )


def load_field_spec(path: str) -> SmoothField:
    """
    Load a field spec from a JSON or YAML file.

    Args:
        path: Path to the field spec

    Returns:
        SmoothField built from the FieldSpec
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Field spec not found: {path}")
    with open(path, "r", encoding="utf-8") as file:
        data = yaml.safe_load(file)
    return SmoothField.from_spec(FieldSpec.model_validate(data))


# ====================================================
# BUILT-IN FIELDS
# ====================================================


def constant_field() -> SmoothField:
    return SmoothField("constant", lambda z: (1.2, [0.3, -0.2, 0.1], 0.1))


def translation_field(velocity=(0.5, 0.25, 0.0)) -> SmoothField:
    """Rigid translation of a uniform state."""
    return SmoothField("translation", lambda z: (1.0, list(velocity), 0.0))


def density_wave_field(amplitude: float = 0.1) -> SmoothField:
    """Static density ripple rho = 1 + A sin(x1). Not a solution: grad p is unbalanced."""

    def state_fn(z):
        return 1.0 + amplitude * np.sin(z[1]), [0.0, 0.0, 0.0], 0.0

    return SmoothField("density_wave", state_fn)


def simple_wave_field(
    eos: Optional[Eos] = None, a0: float = 2.0, b: float = 0.5, J0: float = -4.0
) -> SmoothField:
    """
    Exact isentropic simple wave of the gamma-law gas moving along x1.

    The backward Riemann invariant u - 2c/(gamma-1) = J0 is uniform and the
    forward characteristic speed a = u + c is the Burgers solution with
    a(0, x) = a0 + b x:

        a = a0 + b (x - a0 t) / (1 + b t)
        u = (2a + (gamma-1) J0) / (gamma+1),  c = (gamma-1)(a - J0) / (gamma+1)
        rho = (c^2 / (gamma K))^(1/(gamma-1)),  s = 0
    """
    eos = eos or IdealGas()
    gamma, K = eos.gamma, eos.K

    def state_fn(z):
        t, x = z[0], z[1]
        a = a0 + b * (x - a0 * t) / (1.0 + b * t)
        u = (2.0 * a + (gamma - 1.0) * J0) / (gamma + 1.0)
        c = (gamma - 1.0) * (a - J0) / (gamma + 1.0)
        rho = (c * c / (gamma * K)) ** (1.0 / (gamma - 1.0))
        return rho, [u, 0.0, 0.0], 0.0

    # keep 1 + b t > 0 and a > J0 (positive sound speed)
    t_min = -0.5 / b if b > 0 else -np.inf
    x_span = 0.5 * (a0 - J0) / abs(b) if b != 0 else np.inf
    return SmoothField(
        "simple_wave",
        state_fn,
        lower=[t_min, -x_span, -np.inf, -np.inf],
        upper=[0.5 / abs(b) if b != 0 else np.inf, x_span, np.inf, np.inf],
    )


def trig_mix_field(seed: int = 0) -> SmoothField:
    """Random superposition of sine waves in every variable, including Omega."""
    rng = np.random.default_rng(seed)

    def waves(amplitude: float, count: int = 2) -> List[TrigTerm]:
        return [
            TrigTerm(
                amplitude=float(rng.uniform(-amplitude, amplitude)),
                wavenumber=tuple(float(k) for k in rng.uniform(-1.5, 1.5, size=4)),
                phase=float(rng.uniform(0.0, 2.0 * np.pi)),
            )
            for _ in range(count)
        ]

    spec = FieldSpec(
        name=f"trig_mix_{seed}",
        rho=ScalarExpression(constant=1.0, trig=waves(0.15)),
        v=tuple(
            ScalarExpression(constant=float(rng.uniform(-0.5, 0.5)), trig=waves(0.2))
            for _ in range(3)
        ),
        s=ScalarExpression(trig=waves(0.1)),
        omega=ScalarExpression(trig=waves(0.2)),
    )
    return SmoothField.from_spec(spec)


def builtin_field(name: str, seed: int = 0, eos: Optional[Eos] = None) -> SmoothField:
    """
    Look up a built-in manufactured field by name.

    Args:
        name: One of ``BUILTIN_FIELDS``
        seed: Seed of the ``trig_mix`` field
        eos: EOS the ``simple_wave`` field is an exact solution for

    Returns:
        SmoothField
    """
    if name == "constant":
        return constant_field()
    if name == "translation":
        return translation_field()
    if name == "density_wave":
        return density_wave_field()
    if name == "simple_wave":
        return simple_wave_field(eos)
    if name == "trig_mix":
        return trig_mix_field(seed)
    raise InvalidInputError(f"unknown field {name!r}; expected one of {', '.join(BUILTIN_FIELDS)}")
