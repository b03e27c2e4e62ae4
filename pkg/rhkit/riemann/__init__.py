"""
Exact 1-D Riemann solver for the ideal gas, built on the Rankine-Hugoniot shock relations.
"""

from .exact_solver import (
    ExactRiemannSolver,
    Primitive,
    RiemannSolution,
    WaveKind,
    sample,
    solve_star,
)

__all__ = [
    "ExactRiemannSolver",
    "Primitive",
    "RiemannSolution",
    "WaveKind",
    "sample",
    "solve_star",
]
