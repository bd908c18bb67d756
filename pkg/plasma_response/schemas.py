"""
Enumerations shared by the response, validation and CLI layers.
"""

from enum import Enum


class ResponseModel(str, Enum):
    """
    Enumeration of the response models.

    Declaration order is the output order of eval_all, sweeps and CSV rows:
    - MERMIN: collisional quantum plasma with particle-number-conserving relaxation
    - LINDHARD: collisionless Lindhard form with the naive substitution omega -> omega + i*nu
    - CLASSICAL: degenerate plasma in the q -> 0 (linearized occupation) limit
    """
    MERMIN = "mermin"
    LINDHARD = "lindhard"
    CLASSICAL = "classical"


class Suite(str, Enum):
    """
    Enumeration of validation suites.

    - KERNELS: closed-form kernels against quadrature
    - ORACLE3D: J integrals over the Fermi ball against the 1-D reductions
    - LIMITS: Drude, static, Lindhard and classical limits plus exact identities
    - SUMRULE: f-sum rule
    - FIGURES: advisory qualitative properties of the figure curves
    - ALL: kernels, oracle3d, limits and sumrule together
    """
    KERNELS = "kernels"
    ORACLE3D = "oracle3d"
    LIMITS = "limits"
    SUMRULE = "sumrule"
    FIGURES = "figures"
    ALL = "all"


class SweepVariable(str, Enum):
    """Variable swept by a SweepSpec."""
    X = "x"
    Q = "q"
