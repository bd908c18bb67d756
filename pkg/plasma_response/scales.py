"""
Physical plasma parameters and their dimensionless counterparts.

Gaussian-CGS units throughout. Physical units appear only in this module;
everything downstream works on DimensionlessQuery.
"""

import math
from typing import Optional

from pydantic import ValidationError

from plasma_response.exceptions import require_positive
from plasma_response.logging_config import get_logger
from plasma_response.models import DimensionlessQuery, FermiScales, domain_error_from

logger = get_logger(__name__)

# CGS constants (CODATA 2018)
ELECTRON_CHARGE_CGS = 4.803204712570263e-10  # statC
ELECTRON_MASS_CGS = 9.1093837015e-28  # g
HBAR_CGS = 1.054571817e-27  # erg*s


def derive_fermi_scales(N: float, e: float, m: float, hbar: float, nu: float) -> FermiScales:
    """
    Derive the Fermi scales of a degenerate electron gas.

    Args:
        N: electron number density, 1/cm^3
        e: electron charge, statC
        m: electron mass, g
        hbar: reduced Planck constant, erg*s
        nu: collision frequency, 1/s

    Returns:
        FermiScales: k_F = (3 pi^2 N)^(1/3), v_F = hbar k_F / m, E_F = m v_F^2 / 2,
        omega_p = sqrt(4 pi e^2 N / m), sigma_0 = e^2 N / (m nu)

    Raises:
        DomainError: naming the first non-positive input
    """
    require_positive(N=N, e=e, m=m, hbar=hbar, nu=nu)

    k_F = (3.0 * math.pi ** 2 * N) ** (1.0 / 3.0)
    v_F = hbar * k_F / m
    try:
        scales = FermiScales(
            N=N,
            e=e,
            m=m,
            hbar=hbar,
            nu=nu,
            k_F=k_F,
            v_F=v_F,
            E_F=0.5 * m * v_F ** 2,
            omega_p=math.sqrt(4.0 * math.pi * e ** 2 * N / m),
            sigma_0=e ** 2 * N / (m * nu)
        )
    except ValidationError as exc:
        # underflow of a derived scale
        raise domain_error_from(exc) from exc

    logger.debug(f"Fermi scales: k_F={scales.k_F:.6e} 1/cm, v_F={scales.v_F:.6e} cm/s, x_p={scales.x_p:.6e}")
    return scales


def to_dimensionless(omega: float, nu: float, k: float, scales: FermiScales) -> DimensionlessQuery:
    """
    Map (omega, nu, k) to q = k/k_F, x = omega/(k_F v_F), y = nu/(k_F v_F)
    and x_p = omega_p/(k_F v_F).
    """
    require_positive(omega=omega, nu=nu, k=k)
    unit = scales.k_F * scales.v_F
    return DimensionlessQuery.build(q=k / scales.k_F, x=omega / unit, y=nu / unit, x_p=scales.omega_p / unit)


def query_from_physical(
    omega: float,
    nu: float,
    k: float,
    N: float,
    e: Optional[float] = None,
    m: Optional[float] = None,
    hbar: Optional[float] = None,
) -> DimensionlessQuery:
    """
    Build a query straight from physical inputs; e, m and hbar default to the
    electron values in CGS.
    """
    scales = derive_fermi_scales(
        N=N,
        e=ELECTRON_CHARGE_CGS if e is None else e,
        m=ELECTRON_MASS_CGS if m is None else m,
        hbar=HBAR_CGS if hbar is None else hbar,
        nu=nu
    )
    return to_dimensionless(omega, nu, k, scales)
