"""
Transverse conductivity and permittivity of a degenerate collisional plasma.

Every model is written through its bracket B(q, z):

    sigma / sigma_0 = (i y / x) B,        eps = 1 - (x_p^2 / x^2) B

- mermin:    B = 1 + (x J_omega + i y J_nu) / z,  J_omega = (3/16) T1, J_nu = (3/8) T0
- lindhard:  B = 1 + (3/16) T1(q, z)              (collisionless form with omega -> omega + i nu)
- classical: B = (x / z) C(z / q)                 (linearized occupation difference)

so the permittivity/conductivity identity eps - 1 = i (x_p^2 / (x y)) sigma/sigma_0
holds for all three models by construction.
"""

from typing import Callable, Dict, List

from plasma_response.exceptions import DomainError, PlasmaResponseError
from plasma_response.kernels import classical_kernel, kernel_pair, t0_closed
from plasma_response.logging_config import get_logger
from plasma_response.models import DimensionlessQuery, ResponseSample
from plasma_response.schemas import ResponseModel

logger = get_logger(__name__)


# =============================================================================
# REDUCED J INTEGRALS
# =============================================================================

def j_omega(q: float, z: complex) -> complex:
    """J_omega = (3/16) T1(q, z); vanishes like (1/5) q^2 / z^2 as q -> 0."""
    return 3.0 / 16.0 * kernel_pair(q, z).t1


def j_nu(q: float) -> float:
    """J_nu = (3/8) T0(q); tends to -1 as q -> 0."""
    return 3.0 / 8.0 * t0_closed(q)


# =============================================================================
# BRACKETS
# =============================================================================

def _mermin_bracket(q: float, z: complex) -> complex:
    kernels = kernel_pair(q, z)
    x, y = z.real, z.imag
    return 1.0 + (x * 3.0 / 16.0 * kernels.t1 + 1j * y * 3.0 / 8.0 * kernels.t0) / z


def _lindhard_bracket(q: float, z: complex) -> complex:
    return 1.0 + 3.0 / 16.0 * kernel_pair(q, z).t1


def _classical_bracket(q: float, z: complex) -> complex:
    return z.real / z * classical_kernel(z / q)


_BRACKETS: Dict[ResponseModel, Callable[[float, complex], complex]] = {
    ResponseModel.MERMIN: _mermin_bracket,
    ResponseModel.LINDHARD: _lindhard_bracket,
    ResponseModel.CLASSICAL: _classical_bracket,
}


def bracket(model: ResponseModel, q: float, z: complex) -> complex:
    """
    Bracket B(q, z) of a model.

    Accepts any z in the upper half-plane, including Re z <= 0, so it also
    serves the mirrored and static evaluations.

    Raises:
        DomainError: if q <= 0 or Im z <= 0
    """
    z = complex(z)
    if not q > 0:
        raise DomainError("q")
    if not z.imag > 0:
        raise DomainError("y")
    return _BRACKETS[ResponseModel(model)](q, z)


def static_weight(model: ResponseModel, q: float, y: float) -> float:
    """
    B(q, i y): weight of the omega = 0 pole of eps, i.e. eps ~ -x_p^2 B(q, iy) / x^2.

    1 + J_nu for mermin, 1 + (3/16) T1(q, iy) for lindhard (real since T1 is
    real on the imaginary axis) and 0 for classical.
    """
    return bracket(model, q, complex(0.0, y)).real


# =============================================================================
# SAMPLES
# =============================================================================

def _require_open_quadrant(query: DimensionlessQuery) -> None:
    if not query.x > 0:
        raise DomainError("x")
    if not query.y > 0:
        raise DomainError("y")


def _require_plasma_frequency(query: DimensionlessQuery) -> None:
    if query.x_p is None:
        raise DomainError("x_p", "x_p is required for the permittivity")


def _sample(model: ResponseModel, query: DimensionlessQuery, b: complex, x: float) -> ResponseSample:
    """Build a sample from the bracket evaluated at real frequency x."""
    sigma = 1j * query.y / x * b
    epsilon = None
    if query.x_p is not None:
        epsilon = 1.0 - query.x_p ** 2 / x ** 2 * b
    return ResponseSample(model=model, sigma_ratio=sigma, epsilon=epsilon, query=query)


def evaluate(model: ResponseModel, query: DimensionlessQuery) -> ResponseSample:
    """
    Evaluate one model at a query point.

    Args:
        model: response model
        query: evaluation point with x > 0 and y > 0

    Returns:
        ResponseSample: sigma/sigma_0, plus eps when the query carries x_p

    Raises:
        DomainError: on x <= 0 or y <= 0
        ConvergenceError: if a kernel quadrature fallback fails
    """
    model = ResponseModel(model)
    _require_open_quadrant(query)
    return _sample(model, query, bracket(model, query.q, query.z), query.x)


def sigma_mermin(query: DimensionlessQuery) -> ResponseSample:
    """Mermin-type collisional conductivity (with eps when x_p is present)."""
    return evaluate(ResponseModel.MERMIN, query)


def eps_mermin(query: DimensionlessQuery) -> ResponseSample:
    """Mermin-type permittivity; requires x_p."""
    _require_plasma_frequency(query)
    return evaluate(ResponseModel.MERMIN, query)


def sigma_lindhard(query: DimensionlessQuery) -> ResponseSample:
    return evaluate(ResponseModel.LINDHARD, query)


def eps_lindhard(query: DimensionlessQuery) -> ResponseSample:
    _require_plasma_frequency(query)
    return evaluate(ResponseModel.LINDHARD, query)


def sigma_classical(query: DimensionlessQuery) -> ResponseSample:
    """
    Classical degenerate-plasma conductivity

        sigma/sigma_0 = (i y / z) (3a/4) [2a - (1 - a^2) Log((a - 1)/(a + 1))],  a = z/q.
    """
    return evaluate(ResponseModel.CLASSICAL, query)


def eps_classical(query: DimensionlessQuery) -> ResponseSample:
    _require_plasma_frequency(query)
    return evaluate(ResponseModel.CLASSICAL, query)


def eval_all(query: DimensionlessQuery, models: List[ResponseModel] = None) -> List[ResponseSample]:
    """
    Evaluate every requested model (default all) in declaration order.

    A model that raises yields a NaN sample carrying the error text; the
    remaining models are still evaluated.
    """
    selected = set(models) if models is not None else set(ResponseModel)
    samples = []
    for model in ResponseModel:
        if model not in selected:
            continue
        try:
            samples.append(evaluate(model, query))
        except PlasmaResponseError as e:
            logger.warning(f"{model.value} failed at q={query.q}, x={query.x}, y={query.y}: {e}")
            samples.append(ResponseSample.failed(model, query, str(e)))
    return samples


# =============================================================================
# INTERNAL CHECKS
# =============================================================================

def eval_negative_x(query: DimensionlessQuery, model: ResponseModel) -> ResponseSample:
    """
    Evaluate a model at the mirrored frequency -x, feeding z = -x + iy to the kernels.

    The returned sample echoes the (positive-x) query it mirrors; its values
    should equal the conjugates of evaluate(model, query).
    """
    model = ResponseModel(model)
    _require_open_quadrant(query)
    z = complex(-query.x, query.y)
    return _sample(model, query, bracket(model, query.q, z), -query.x)


def sigma_mermin_misprinted(query: DimensionlessQuery) -> ResponseSample:
    """
    Mermin conductivity without the leading 1 in the bracket:
    (i y / x)(x J_omega + i y J_nu) / z. Fails the q -> 0 Drude limit.
    """
    _require_open_quadrant(query)
    z = query.z
    b = _mermin_bracket(query.q, z) - 1.0
    return _sample(ResponseModel.MERMIN, query, b, query.x)
