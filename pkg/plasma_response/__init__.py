"""
Transverse conductivity and permittivity of a degenerate collisional electron plasma.

Mermin-type collisional, Lindhard and classical models, the kernels they are
built from, and the oracles that validate them.
"""

from plasma_response.kernels import kernel_pair, t0_closed, t0_quadrature, t1_closed, t1_quadrature
from plasma_response.models import DimensionlessQuery, FermiScales, KernelPair, ResponseSample, SweepSpec
from plasma_response.response import (
    eps_lindhard,
    eps_mermin,
    eval_all,
    evaluate,
    j_nu,
    j_omega,
    sigma_classical,
    sigma_lindhard,
    sigma_mermin,
)
from plasma_response.scales import derive_fermi_scales, to_dimensionless
from plasma_response.schemas import ResponseModel, Suite, SweepVariable

__all__ = [
    "DimensionlessQuery",
    "FermiScales",
    "KernelPair",
    "ResponseModel",
    "ResponseSample",
    "Suite",
    "SweepSpec",
    "SweepVariable",
    "derive_fermi_scales",
    "eps_lindhard",
    "eps_mermin",
    "eval_all",
    "evaluate",
    "j_nu",
    "j_omega",
    "kernel_pair",
    "sigma_classical",
    "sigma_lindhard",
    "sigma_mermin",
    "t0_closed",
    "t0_quadrature",
    "t1_closed",
    "t1_quadrature",
    "to_dimensionless",
]
