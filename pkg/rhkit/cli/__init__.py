"""
Command-line front end: argument parsing, run configuration and I/O schemas.
"""

from .config import DEFAULT_TOLERANCES, RunConfig, load_config, tolerance_scale
from .main import build_parser, main, run
from .schemas import SCHEMAS, PairInput, StateInput

__all__ = [
    "DEFAULT_TOLERANCES",
    "RunConfig",
    "load_config",
    "tolerance_scale",
    "build_parser",
    "main",
    "run",
    "SCHEMAS",
    "PairInput",
    "StateInput",
]
