"""
Bracketed scalar root finding: bisection down to a coarse width, then a
secant polish, falling back to plain bisection whenever the polish leaves
the bracket or stalls.
"""

import logging
from typing import Callable, Optional
import warnings

import numpy as np
from scipy import optimize

from rhkit.errors import RootNotBracketedError

logger = logging.getLogger(__name__)

MACHINE_RTOL = 4.0 * np.finfo(float).eps


def find_upper_bracket(
    fn: Callable[[float], float],
    lower: float,
    step: float,
    growth: float = 2.0,
    max_iter: int = 60,
) -> float:
    """
    Move the upper end away from ``lower`` until ``fn`` changes sign.

    Args:
        fn: Scalar function
        lower: Lower end, where fn is evaluable and non-zero
        step: Initial distance of the upper end from ``lower``
        growth: Geometric growth factor of the distance
        max_iter: Maximum number of expansions

    Returns:
        Upper end with sign(fn(upper)) != sign(fn(lower))
    """
    f_lower = fn(lower)
    for iteration in range(max_iter):
        upper = lower + step
        if np.sign(fn(upper)) != np.sign(f_lower):
            logger.debug(f"Upper bracket {upper:.6g} found after {iteration + 1} expansions")
            return upper
        step *= growth
    raise RootNotBracketedError(
        f"no sign change of the function within {max_iter} bracket expansions from {lower}"
    )


def _bisect(fn, lower, upper, sign_lower, width):
    while upper - lower > width * max(1.0, abs(upper)):
        mid = 0.5 * (lower + upper)
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid, mid
        if np.sign(f_mid) == sign_lower:
            lower = mid
        else:
            upper = mid
    return lower, upper


def bisect_newton(
    fn: Callable[[float], float],
    lower: float,
    upper: float,
    xtol: float = 1e-8,
    sign_lower: Optional[float] = None,
) -> float:
    """
    Root of ``fn`` inside [lower, upper].

    Args:
        fn: Scalar function with a sign change on the bracket
        lower: Lower end of the bracket
        upper: Upper end of the bracket
        xtol: Relative bracket width at which bisection hands over to the secant polish
        sign_lower: Known sign of fn near ``lower``; when given, fn(lower) is never
            evaluated (for functions singular at the bracket end)

    Returns:
        Root to machine precision
    """
    if sign_lower is None:
        f_lower = fn(lower)
        if f_lower == 0.0:
            return lower
        sign_lower = np.sign(f_lower)
    f_upper = fn(upper)
    if f_upper == 0.0:
        return upper
    if not np.isfinite(f_upper) or np.sign(f_upper) == sign_lower:
        raise RootNotBracketedError(
            f"root not bracketed on [{lower:.6g}, {upper:.6g}] (f(upper) = {f_upper:.6g})"
        )

    lower, upper = _bisect(fn, lower, upper, sign_lower, xtol)
    if lower == upper:
        return lower

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        root, info = optimize.newton(
            fn,
            x0=lower,
            x1=upper,
            tol=MACHINE_RTOL * abs(upper),
            maxiter=50,
            full_output=True,
            disp=False,
        )
    slack = xtol * max(1.0, abs(upper))
    if info.converged and np.isfinite(root) and lower - slack <= root <= upper + slack:
        return float(root)

    logger.debug("Secant polish left the bracket, finishing by bisection")
    lower, upper = _bisect(fn, lower, upper, sign_lower, MACHINE_RTOL)
    return 0.5 * (lower + upper)
