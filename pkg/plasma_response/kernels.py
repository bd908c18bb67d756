"""
Degenerate-plasma kernels T0(q) and T1(q, z).

T0(q)    = PV int_0^1  (1-t^2)^2 dt / (t^2 - q^2/4)
T1(q, z) =    int_-1^1 (1-t^2)^2 dt / ((t - z/q)^2 - q^2/4),   Im z > 0

Both are evaluated in closed form, with series branches where the closed
form cancels catastrophically (small q for T0, large |z/q| for T1), and
cross-checked by independent adaptive quadrature oracles. The classical
(linearized occupation) kernel C(a) lives here too since it shares the
same log structure.
"""

from typing import Callable

import numpy as np

from plasma_response.config import settings
from plasma_response.exceptions import DomainError, require_positive
from plasma_response.logging_config import get_logger
from plasma_response.models import KernelPair
from plasma_response.quadrature import complex_quad, real_quad

logger = get_logger(__name__)

_EPS = np.finfo(float).eps


def occupation_weight(t):
    """(1 - t^2)^2, the Fermi-ball cross-section weight along the q axis."""
    return (1.0 - t * t) ** 2


def _occupation_weight_derivative(t: float) -> float:
    return 4.0 * t ** 3 - 4.0 * t


def _check_upper_half_plane(z: complex) -> None:
    if not complex(z).imag > 0:
        raise DomainError("z", "Im z must be > 0")


def _log_ratio(c: complex) -> complex:
    """Principal Log((c - 1)/(c + 1)); the ratio stays in the upper half-plane for Im c > 0."""
    return complex(np.log((c - 1.0) / (c + 1.0)))


# =============================================================================
# T0: REAL PRINCIPAL-VALUE KERNEL
# =============================================================================

def t0_series(q: float) -> float:
    """
    Small-q expansion of T0.

    T0 = -sum_k 8 s^(2k) / ((2k+1)(2k-1)(2k-3)),  s = q/2,
    i.e. -8/3 + (2/3) q^2 - (8/15) s^4 - ... ; converges for q < 2.
    """
    require_positive(q=q)
    s2 = (q / 2.0) ** 2
    total = 0.0
    power = 1.0
    for k in range(settings.SERIES_MAX_TERMS):
        term = 8.0 * power / ((2 * k + 1) * (2 * k - 1) * (2 * k - 3))
        total -= term
        if k > 1 and abs(term) <= _EPS * abs(total):
            break
        power *= s2
    return total


def t0_closed(q: float) -> float:
    """
    T0(q) = -5/3 + q^2/4 + ((q^2 - 4)^2 / (16 q)) ln|(2 - q)/(2 + q)|.

    For 0 < q < 2 this is the Cauchy principal value (pole at t = q/2); for
    q >= 2 the integral is proper. The log is computed as -2 artanh(min(q/2, 2/q))
    and the series is used below settings.T0_SERIES_THRESHOLD.

    Raises:
        DomainError: if q <= 0
    """
    require_positive(q=q)
    if q < settings.T0_SERIES_THRESHOLD:
        return t0_series(q)
    if q == 2.0:
        # log coefficient vanishes
        return -5.0 / 3.0 + 1.0
    log_ratio = -2.0 * float(np.arctanh(q / 2.0 if q < 2.0 else 2.0 / q))
    return -5.0 / 3.0 + q * q / 4.0 + (q * q - 4.0) ** 2 / (16.0 * q) * log_ratio


def t0_quadrature(q: float, tol: float = settings.QUAD_TOL) -> float:
    """
    Quadrature oracle for T0.

    For 0 < q < 2 the pole at b = q/2 is excised symmetrically: on the window
    [b - d, b + d], d = min(b, 1 - b), the principal value of g(t)/(t - b) with
    g(t) = (1 - t^2)^2 / (t + b) equals the regular integral of the difference
    quotient (g(t) - g(b))/(t - b); the rest of [0, 1] is integrated as is.

    Raises:
        DomainError: if q <= 0 or |q - 2| <= settings.Q2_EXCLUSION (pole at t = 1)
        ConvergenceError: if a quadrature exhausts its subdivision budget
    """
    require_positive(q=q)
    if abs(q - 2.0) <= settings.Q2_EXCLUSION:
        raise DomainError("q", "q must not lie within 1e-6 of 2 (pole at the endpoint t = 1)")

    b = q / 2.0
    if b > 1.0:
        return real_quad(lambda t: occupation_weight(t) / (t * t - b * b), 0.0, 1.0, tol)

    def g(t: float) -> float:
        return occupation_weight(t) / (t + b)

    g_b = g(b)
    dg_b = (_occupation_weight_derivative(b) * 2.0 * b - occupation_weight(b)) / (2.0 * b) ** 2

    def quotient(t: float) -> float:
        if t == b:
            return dg_b
        return (g(t) - g_b) / (t - b)

    half_width = min(b, 1.0 - b)
    lo, hi = b - half_width, b + half_width
    total = real_quad(quotient, lo, hi, tol)
    if lo > 0.0:
        total += real_quad(lambda t: g(t) / (t - b), 0.0, lo, tol)
    if hi < 1.0:
        total += real_quad(lambda t: g(t) / (t - b), hi, 1.0, tol)
    return total


# =============================================================================
# T1: COMPLEX z-SHIFTED KERNEL
# =============================================================================

def t1_series(q: float, z: complex) -> complex:
    """
    Large-|z/q| expansion of T1.

    With a = z/q, b = q/2, 1/((t - a)^2 - b^2) = sum_n d_n t^n where
    (a^2 - b^2) d_n = 2a d_(n-1) - d_(n-2); the even moments of (1 - t^2)^2
    are 16/((n+1)(n+3)(n+5)). Valid when both poles a +- b lie outside the
    unit disc; used only when they lie beyond settings.T1_SERIES_RADIUS.
    """
    require_positive(q=q)
    _check_upper_half_plane(z)
    a = complex(z) / q
    b = q / 2.0
    w = 1.0 / (a * a - b * b)

    d_prev, d = 0j, w
    total = 0j
    for n in range(settings.SERIES_MAX_TERMS):
        if n % 2 == 0:
            term = 16.0 * d / ((n + 1) * (n + 3) * (n + 5))
            total += term
            if n > 0 and abs(term) <= _EPS * abs(total):
                break
        d_prev, d = d, w * (2.0 * a * d - d_prev)
    return total


def _t1_assembled(q: float, z: complex) -> complex:
    """
    Closed form of T1 in the two-log layout.

    T1 = -10/3 + 6 a^2 + q^2/2
         + (1/q)[(1 - a^2)^2 + q^4/16 - q^2/2 + 3 z^2/2] * L1
         - (z q/2)[(4/q^2)(1 - a^2) - 1] * L2
    with a = z/q, L1 = Log(c+) - Log(c-) and L2 = Log(c+) + Log(c-), where
    Log(c) = Log((c - 1)/(c + 1)) and c+- = a +- q/2.
    """
    a = z / q
    c_plus, c_minus = a + q / 2.0, a - q / 2.0
    log_plus, log_minus = _log_ratio(c_plus), _log_ratio(c_minus)

    rational = -10.0 / 3.0 + 6.0 * a * a + q * q / 2.0
    first = ((1.0 - a * a) ** 2 + q ** 4 / 16.0 - q * q / 2.0 + 1.5 * z * z) / q
    second = -(z * q / 2.0) * ((4.0 / (q * q)) * (1.0 - a * a) - 1.0)
    return rational + first * (log_plus - log_minus) + second * (log_plus + log_minus)


def t1_closed(q: float, z: complex) -> complex:
    """
    Closed-form T1(q, z) for q > 0, Im z > 0.

    Uses t1_series when both poles z/q +- q/2 lie beyond settings.T1_SERIES_RADIUS,
    the assembled closed form otherwise.

    Raises:
        DomainError: if q <= 0 or Im z <= 0
    """
    require_positive(q=q)
    _check_upper_half_plane(z)
    z = complex(z)
    a = z / q
    if min(abs(a + q / 2.0), abs(a - q / 2.0)) > settings.T1_SERIES_RADIUS:
        return t1_series(q, z)
    return _t1_assembled(q, z)


def t1_integrand(q: float, z: complex) -> Callable[[float], complex]:
    """Integrand of T1 on [-1, 1]."""
    a = complex(z) / q
    b2 = (q / 2.0) ** 2

    def integrand(t: float) -> complex:
        return occupation_weight(t) / ((t - a) ** 2 - b2)

    return integrand


def t1_poles(q: float, z: complex) -> list:
    """Real parts of the integrand poles z/q +- q/2 (quadrature breakpoints)."""
    a = complex(z) / q
    return [(a - q / 2.0).real, (a + q / 2.0).real]


def t1_quadrature(q: float, z: complex, tol: float = settings.QUAD_TOL) -> complex:
    """
    Quadrature oracle for T1: adaptive integration over [-1, 1] with
    breakpoints at the real parts of the two poles.

    Raises:
        DomainError: if q <= 0 or Im z <= 0
        ConvergenceError: if the subdivision budget is exhausted
    """
    require_positive(q=q)
    _check_upper_half_plane(z)
    return complex_quad(t1_integrand(q, z), -1.0, 1.0, tol, points=t1_poles(q, z))


def kernel_pair(q: float, z: complex, verify: bool = False) -> KernelPair:
    """
    Evaluate both kernels at (q, z).

    T1 falls back to quadrature (and the pair is flagged) when the closed
    form is not finite, or when verify is set and closed form and quadrature
    disagree by more than settings.BRANCH_TOL relative.
    """
    t0 = t0_closed(q)
    t1 = t1_closed(q, z)

    reference = None
    fallback = not np.isfinite(t1)
    if not fallback and verify:
        reference = t1_quadrature(q, z)
        fallback = abs(t1 - reference) > settings.BRANCH_TOL * abs(reference)

    if fallback:
        if reference is None:
            reference = t1_quadrature(q, z)
        logger.warning(f"T1 closed form rejected at q={q}, z={z}: {t1} vs quadrature {reference}")
        t1 = reference

    return KernelPair(t0=t0, t1=t1, branch_fallback=fallback)


# =============================================================================
# CLASSICAL KERNEL
# =============================================================================

def classical_series(a: complex) -> complex:
    """Large-|a| expansion C(a) = 1 + 3 sum_(n odd) a^-(n+1) / ((n+2)(n+4))."""
    inv_a2 = 1.0 / (complex(a) * complex(a))
    total = 1.0 + 0j
    power = inv_a2
    for n in range(1, 2 * settings.SERIES_MAX_TERMS, 2):
        term = 3.0 * power / ((n + 2) * (n + 4))
        total += term
        if abs(term) <= _EPS * abs(total):
            break
        power *= inv_a2
    return total


def classical_kernel(a: complex) -> complex:
    """
    C(a) = 1 - (3/4) int_-1^1 mu (1 - mu^2)/(mu - a) dmu
         = (3a/4) [2a - (1 - a^2) Log((a - 1)/(a + 1))],  Im a > 0.

    C -> 1 as |a| -> infinity (the local Drude limit).
    """
    a = complex(a)
    _check_upper_half_plane(a)
    if abs(a) > settings.T1_SERIES_RADIUS:
        return classical_series(a)
    return 0.75 * a * (2.0 * a - (1.0 - a * a) * _log_ratio(a))


def classical_quadrature(a: complex, tol: float = settings.QUAD_TOL) -> complex:
    """Quadrature oracle for C(a)."""
    a = complex(a)
    _check_upper_half_plane(a)
    integral = complex_quad(lambda mu: mu * (1.0 - mu * mu) / (mu - a), -1.0, 1.0, tol, points=[a.real])
    return 1.0 - 0.75 * integral
