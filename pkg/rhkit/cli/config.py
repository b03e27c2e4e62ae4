"""
Run configuration of the command-line front end.

The configuration is a YAML (or JSON) file parsed strictly: unknown keys are
rejected. Tolerances listed in ``DEFAULT_TOLERANCES`` can be overridden by
name, and every pass/fail tolerance is multiplied by the environment variable
``RHKIT_TOLERANCE_SCALE`` (default 1.0, also read from a ``.env`` file).
"""

import os
from pathlib import Path
from typing import Dict, Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator
import yaml

TOLERANCE_SCALE_ENV = "RHKIT_TOLERANCE_SCALE"

DEFAULT_TOLERANCES: Dict[str, float] = {
    # nondimensional Rankine-Hugoniot residual norm
    "rh_residuals": 1e-10,
    # norm of N*[T]
    "spacetime_term": 1e-10,
    # norm of the reference-space surface term
    "reference_term": 1e-10,
    # kinematic closure of a pair
    "closure": 1e-12,
    # [p] and [n.v] of a contact pair
    "contact": 1e-12,
    # smallest N*[T] norm that counts as a variational gap
    "gap_spacetime": 1e-3,
    # (F* - Div T) against the table form
    "table_gap": 1e-10,
}


# ====================================================
# 📋 CONFIG SCHEMA
# ====================================================


class LoggingConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        "WARNING", description="Log level of the diagnostics written to stderr"
    )


class RunConfig(BaseModel):
    """Settings shared by every subcommand."""

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "eos_path": "config/eos_ideal.json",
                "tolerances": {"rh_residuals": 1e-10},
                "output_format": "json",
                "seed": 0,
                "logging": {"level": "INFO"},
            }
        },
    )

    eos_path: Optional[str] = Field(None, description="EOS file used when --eos is not given")
    tolerances: Dict[str, float] = Field(
        default_factory=dict, description="Overrides of the default pass/fail tolerances"
    )
    output_format: Optional[Literal["json", "csv"]] = Field(
        None, description="Output format of the table commands (command default when omitted)"
    )
    seed: int = Field(0, description="Seed of randomized inputs")
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    @field_validator("tolerances")
    @classmethod
    def _known_positive(cls, value: Dict[str, float]) -> Dict[str, float]:
        unknown = sorted(set(value) - set(DEFAULT_TOLERANCES))
        if unknown:
            raise ValueError(
                f"unknown tolerance(s) {unknown}; expected names from {sorted(DEFAULT_TOLERANCES)}"
            )
        for name, tol in value.items():
            if not tol > 0.0:
                raise ValueError(f"tolerance {name!r} must be positive, got {tol}")
        return value

    def tolerance(self, name: str) -> float:
        """Effective tolerance: override or default, times the environment scale."""
        return self.tolerances.get(name, DEFAULT_TOLERANCES[name]) * tolerance_scale()


# ====================================================
# 🔧 LOADING
# ====================================================


def tolerance_scale() -> float:
    """Multiplier of every pass/fail tolerance, from RHKIT_TOLERANCE_SCALE."""
    raw = os.getenv(TOLERANCE_SCALE_ENV, "1.0")
    try:
        scale = float(raw)
    except ValueError:
        raise ValueError(f"{TOLERANCE_SCALE_ENV} must be a number, got {raw!r}") from None
    if not scale > 0.0:
        raise ValueError(f"{TOLERANCE_SCALE_ENV} must be positive, got {scale}")
    return scale


def load_environment():
    """Carga variables de entorno desde un archivo .env si existe."""
    load_dotenv()


def load_config(config_path: Optional[str] = None) -> RunConfig:
    """
    Load the run configuration.

    Args:
        config_path: YAML/JSON file; defaults apply when None

    Returns:
        Validated RunConfig
    """
    if config_path is None:
        return RunConfig()
    path = Path(config_path)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    with open(path, "r", encoding="utf-8") as file:
        data = yaml.safe_load(file)
    return RunConfig.model_validate(data or {})
