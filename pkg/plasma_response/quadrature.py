"""
Adaptive quadrature helpers shared by the kernel oracles and the 3-D oracle.

Both helpers wrap scipy.integrate with one outcome policy:
- exhausted subdivision budget, non-finite value or a divergence report
  raise ConvergenceError carrying the value reached and its error estimate
- roundoff-limited results are accepted; the achieved error is logged at DEBUG
"""

import math
from typing import Callable, Iterable, Optional

import numpy as np
from scipy import integrate

from plasma_response.config import settings
from plasma_response.exceptions import ConvergenceError
from plasma_response.logging_config import get_logger

logger = get_logger(__name__)

# QUADPACK / quad_vec messages that mean the value cannot be trusted
_FATAL_MESSAGES = ("maximum number of subdivisions", "probably divergent")


def _interior_points(points: Optional[Iterable[float]], a: float, b: float) -> Optional[list]:
    """Keep the distinct breakpoints strictly inside (a, b), sorted."""
    if points is None:
        return None
    inside = sorted({float(p) for p in points if a < p < b})
    return inside or None


def _check_outcome(kind: str, a: float, b: float, value: complex, error: float, message: Optional[str]) -> None:
    """Raise for fatal quadrature outcomes, log the accepted ones."""
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ConvergenceError(f"{kind} quadrature on [{a}, {b}] produced a non-finite value", value, error)
    if message is None:
        return
    text = str(message)
    if any(fatal in text.lower() for fatal in _FATAL_MESSAGES):
        raise ConvergenceError(f"{kind} quadrature on [{a}, {b}] failed: {text}", value, error)
    logger.debug(f"{kind} quadrature on [{a}, {b}] accepted with error estimate {error:.3e}: {text}")


def real_quad(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    points: Optional[Iterable[float]] = None,
    limit: Optional[int] = None,
) -> float:
    """
    Integrate a real function over [a, b] with QUADPACK.

    Args:
        f: integrand
        a, b: finite limits
        tol: relative tolerance
        points: optional breakpoints (kinks, near-singular spots)
        limit: subdivision budget (default settings.QUAD_LIMIT)

    Returns:
        float: the integral

    Raises:
        ConvergenceError: if the subdivision budget was exhausted, the
            integral looks divergent or the value is not finite
    """
    limit = limit or settings.QUAD_LIMIT
    value, error, _, *message = integrate.quad(
        f, a, b,
        epsabs=0.0,
        epsrel=tol,
        limit=limit,
        points=_interior_points(points, a, b),
        full_output=1,
    )
    # quad appends a message only when ier > 0
    _check_outcome("real", a, b, complex(value), float(error), message[0] if message else None)
    return float(value)


def complex_quad(
    f: Callable[[float], complex],
    a: float,
    b: float,
    tol: float,
    points: Optional[Iterable[float]] = None,
    limit: Optional[int] = None,
) -> complex:
    """
    Integrate a complex function over [a, b].

    The real and imaginary parts are integrated together as a 2-vector with
    scipy.integrate.quad_vec, so the relative tolerance applies to |integral|.
    Status 2 (roundoff) is accepted.

    Raises:
        ConvergenceError: if the subdivision budget was exhausted or the
            integrand produced non-finite values
    """
    limit = limit or settings.QUAD_LIMIT

    def pair(t: float) -> np.ndarray:
        v = f(t)
        return np.array([v.real, v.imag])

    value, error, info = integrate.quad_vec(
        pair, a, b,
        epsabs=1e-300,
        epsrel=tol,
        limit=limit,
        points=_interior_points(points, a, b),
        full_output=True,
    )
    result = complex(value[0], value[1])
    message = None
    if info.status == 1:
        message = f"maximum number of subdivisions reached ({info.message})"
    elif info.status != 0:
        message = str(info.message)
    _check_outcome("complex", a, b, result, float(error), message)
    return result
