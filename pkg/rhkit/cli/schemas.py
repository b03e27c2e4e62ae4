"""
Input and output schemas of the command-line front end.

Every JSON document the CLI reads or writes is one of these pydantic models;
``rhkit schema <name>`` prints the corresponding JSON Schema.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from rhkit.eos import Eos
from rhkit.tensors import FluidState

Vector3 = Tuple[float, float, float]
Matrix3 = Tuple[Vector3, Vector3, Vector3]
Covector4 = Tuple[float, float, float, float]

MACH2_EXAMPLE = {"rho": 1.0, "v": [2.3664319132398464, 0.0, 0.0], "p": 1.0, "omega": 0.0}


# ====================================================
# 📋 INPUT MODELS
# ====================================================


class StateInput(BaseModel):
    """Fluid state: density, velocity, one of entropy or pressure, potential."""

    model_config = ConfigDict(extra="forbid", json_schema_extra={"example": MACH2_EXAMPLE})

    rho: float = Field(..., description="Mass density")
    v: Vector3 = Field(..., description="Eulerian velocity")
    s: Optional[float] = Field(None, description="Specific entropy")
    p: Optional[float] = Field(None, description="Pressure, converted to s through the EOS")
    omega: float = Field(0.0, description="Body-force potential")

    @model_validator(mode="after")
    def _one_thermodynamic_variable(self) -> "StateInput":
        if (self.s is None) == (self.p is None):
            raise ValueError("exactly one of 's' and 'p' must be given")
        return self

    def to_state(self, eos: Eos) -> FluidState:
        if self.p is not None:
            return FluidState.from_pressure(self.rho, self.v, self.p, eos, omega=self.omega)
        return FluidState(rho=self.rho, v=self.v, s=self.s, omega=self.omega)


class PairInput(BaseModel):
    """Two states across a surface of normal n moving at D_n."""

    model_config = ConfigDict(extra="forbid")

    up: StateInput = Field(..., description="Upstream state (u = n.v - D_n > 0)")
    down: StateInput = Field(..., description="Downstream state")
    n: Vector3 = Field((1.0, 0.0, 0.0), description="Surface normal (normalized on input)")
    D_n: float = Field(0.0, description="Normal speed of the surface")
    F_up: Optional[Matrix3] = Field(None, description="Upstream deformation gradient")


# ====================================================
# 🎯 OUTPUT MODELS
# ====================================================


class ErrorDetail(BaseModel):
    name: str = Field(..., description="Error name, e.g. NotSupersonic")
    module: str = Field(..., description="Module that raised the error")
    message: str


class ErrorOutput(BaseModel):
    """Physics or domain failure (exit code 2)."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "error": {
                    "name": "NotSupersonic",
                    "module": "shock",
                    "message": "upstream Mach number must exceed 1, got 0.5",
                }
            }
        }
    )

    error: ErrorDetail


class StateOutput(BaseModel):
    rho: float
    v: Vector3
    s: float
    omega: float
    p: float = Field(..., description="Pressure from the EOS")


class PairOutput(BaseModel):
    up: StateOutput
    down: StateOutput
    n: Vector3
    D_n: float = Field(..., description="Normal speed of the surface")
    F_up: Matrix3
    F_down: Matrix3
    f_ref: float = Field(..., description="Reference density rho det F")
    w: Vector3 = Field(..., description="Reference velocity of the surface")


class ResidualsOutput(BaseModel):
    """Nondimensional Rankine-Hugoniot residuals."""

    r_mass: float = Field(..., description="[rho u] / (rho c)")
    r_momentum_n: float = Field(..., description="[p + rho u^2] / p")
    r_vel: Vector3 = Field(..., description="([v] - [u] n) / c")
    r_energy: float = Field(..., description="[u^2/2 + h] / c^2")
    norm: float


class ClosureOutput(BaseModel):
    key_relation: float
    deformation_jump: float
    reference_density: float


class LaxOutput(BaseModel):
    admissible: bool
    is_shock: bool
    u_up: float
    c_up: float
    u_down: float
    c_down: float
    entropy_jump: float
    reason: str


class DetIdentityOutput(BaseModel):
    lemma: float = Field(..., description="|det(I + K L*) - (1 + L* K)|")
    ratio: float = Field(..., description="|det F_down / det F_up - u_down / u_up|")


class ContactOutput(BaseModel):
    relative_velocity: float
    pressure_jump: float
    normal_velocity_jump: float
    density_jump: float
    tangential_velocity_jump: Vector3
    is_contact: bool


class ShockSolveOutput(BaseModel):
    """Solved shock with its residual report."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"rho2": 2.6666666666666665, "p2": 4.5, "mach_down": 0.5773502691896258}
        }
    )

    pair: PairOutput
    rho2: float
    p2: float
    u1: float = Field(..., description="Upstream relative velocity")
    u2: float = Field(..., description="Downstream relative velocity")
    mach_up: float
    mach_down: float
    residuals: ResidualsOutput
    spacetime_term: Covector4 = Field(..., description="N*[T], nondimensional")
    spacetime_term_norm: float
    reference_term: Vector3 = Field(..., description="-[f (v* F + m w*)], nondimensional")
    reference_term_norm: float
    closure: ClosureOutput
    det_identity: DetIdentityOutput
    lax: LaxOutput
    passed: bool


class ShockCheckOutput(BaseModel):
    """Jump conditions of a user-supplied pair."""

    pair: PairOutput
    is_contact: bool
    residuals: Optional[ResidualsOutput] = None
    contact: Optional[ContactOutput] = None
    spacetime_term: Covector4
    spacetime_term_norm: float
    reference_term: Optional[Vector3] = None
    reference_term_norm: Optional[float] = None
    closure: Optional[ClosureOutput] = None
    lax: LaxOutput
    passed: bool


class GapDemoOutput(BaseModel):
    """Pair that satisfies the reference-space conditions but not normal momentum."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"rho2": 2.0, "reference_term_norm": 1e-17, "spacetime_term_norm": 0.6}
        }
    )

    pair: PairOutput
    rho2: float
    density_ratio: float
    momentum_jump: float = Field(..., description="[p + rho u^2] / p_up")
    reference_term: Vector3
    reference_term_norm: float
    spacetime_term: Covector4
    spacetime_term_norm: float
    passed: bool


class HugoniotPointOutput(BaseModel):
    rho2: float
    p2: float
    u2: float
    s2: float
    Dn: float = Field(..., description="Implied normal speed of the shock")


class HugoniotOutput(BaseModel):
    points: List[HugoniotPointOutput]


class TensorCheckOutput(BaseModel):
    field: str
    order: int
    step: float
    rows: List[Dict[str, float]] = Field(..., description="One residual row per query point")
    max_table_gap: float
    max_thermo_gap: float
    passed: bool


class ShockReport(BaseModel):
    pair: PairOutput
    residuals: ResidualsOutput
    lax: LaxOutput


class RiemannStarOutput(BaseModel):
    p_star: float
    u_star: float
    wave_left: str
    wave_right: str
    rho_star_left: float
    rho_star_right: float
    shock_speed_left: Optional[float] = None
    shock_speed_right: Optional[float] = None


class RiemannSampleOutput(BaseModel):
    x: float
    rho: float
    u: float
    p: float
    s: float


class RiemannOutput(BaseModel):
    """Star state, sampled profile and RH report of every shock."""

    model_config = ConfigDict(
        json_schema_extra={"example": {"solution": {"p_star": 0.30313017805064707}}}
    )

    solution: RiemannStarOutput
    t: float
    x0: float
    samples: List[RiemannSampleOutput]
    shocks: List[ShockReport]
    passed: bool


class KinematicsOutput(BaseModel):
    """Blocks of a 4x4 tangent map and the motion it describes."""

    mu: float
    w: Vector3
    r: Vector3
    B3: Matrix3
    v: Vector3 = Field(..., description="Velocity r / mu")
    F: Matrix3 = Field(..., description="Deformation gradient B3 - v w*")
    det_F: float
    four_velocity: Covector4


SCHEMAS = {
    "state": StateInput,
    "pair": PairInput,
    "error": ErrorOutput,
    "shock-solve": ShockSolveOutput,
    "shock-check": ShockCheckOutput,
    "shock-gap-demo": GapDemoOutput,
    "shock-hugoniot": HugoniotOutput,
    "tensor-check": TensorCheckOutput,
    "riemann-solve": RiemannOutput,
    "kinematics-decompose": KinematicsOutput,
}
