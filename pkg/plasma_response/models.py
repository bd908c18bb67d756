"""
Pydantic models for the plasma response library.

This module defines the immutable value types passed between the scales,
kernels, response, validation and CLI layers. All models are frozen; derived
quantities (such as the complex frequency z) are properties, never stored.
"""

import math
from typing import Optional, List, Dict, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from plasma_response.exceptions import DomainError
from plasma_response.schemas import ResponseModel, Suite, SweepVariable

NAN_COMPLEX = complex(math.nan, math.nan)


def domain_error_from(exc: ValidationError) -> DomainError:
    """Translate the first pydantic validation error into a DomainError naming the field."""
    first = exc.errors()[0]
    field = str(first["loc"][0]) if first.get("loc") else "input"
    ctx = first.get("ctx") or {}
    if "gt" in ctx:
        return DomainError(field, f"{field} must be > {ctx['gt']}")
    if "ge" in ctx:
        return DomainError(field, f"{field} must be >= {ctx['ge']}")
    return DomainError(field, f"{field}: {first['msg']}")


# =============================================================================
# PHYSICAL AND DIMENSIONLESS PARAMETERS
# =============================================================================

class FermiScales(BaseModel):
    """
    Physical plasma parameters (Gaussian-CGS) and the derived Fermi scales.

    k_F^3 = 3 pi^2 N, v_F = hbar k_F / m, E_F = m v_F^2 / 2,
    omega_p^2 = 4 pi e^2 N / m, sigma_0 = e^2 N / (m nu).
    """
    model_config = ConfigDict(frozen=True)

    N: float = Field(gt=0)  # electron number density, 1/cm^3
    e: float = Field(gt=0)  # electron charge, statC
    m: float = Field(gt=0)  # electron mass, g
    hbar: float = Field(gt=0)  # reduced Planck constant, erg*s
    nu: float = Field(gt=0)  # collision frequency, 1/s
    k_F: float = Field(gt=0)  # Fermi wavenumber, 1/cm
    v_F: float = Field(gt=0)  # Fermi velocity, cm/s
    E_F: float = Field(gt=0)  # Fermi energy, erg
    omega_p: float = Field(gt=0)  # plasma frequency, rad/s
    sigma_0: float = Field(gt=0)  # static conductivity, 1/s

    @property
    def x_p(self) -> float:
        """Dimensionless plasma frequency omega_p / (k_F v_F)."""
        return self.omega_p / (self.k_F * self.v_F)

    @property
    def x_p_from_energy(self) -> float:
        """The same quantity written as hbar omega_p / (2 E_F)."""
        return self.hbar * self.omega_p / (2.0 * self.E_F)


class DimensionlessQuery(BaseModel):
    """
    Evaluation point of the response functions.

    q = k/k_F, x = omega/(k_F v_F), y = nu/(k_F v_F) and the optional
    x_p = omega_p/(k_F v_F). The boundary values x = 0 and y = 0 are accepted
    here and rejected by the response operations.
    """
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    q: float = Field(gt=0)
    x: float = Field(ge=0)
    y: float = Field(ge=0)
    x_p: Optional[float] = Field(default=None, gt=0)

    @property
    def z(self) -> complex:
        """Complex dimensionless frequency z = x + iy."""
        return complex(self.x, self.y)

    @classmethod
    def build(cls, q: float, x: float, y: float, x_p: Optional[float] = None) -> "DimensionlessQuery":
        """Construct a query, raising DomainError instead of a pydantic ValidationError."""
        try:
            return cls(q=q, x=x, y=y, x_p=x_p)
        except ValidationError as e:
            raise domain_error_from(e) from e


# =============================================================================
# KERNEL AND RESPONSE VALUES
# =============================================================================

class KernelPair(BaseModel):
    """
    Kernel values at one query point.

    t0 is the real principal-value kernel, t1 the complex z-shifted kernel.
    branch_fallback marks points where t1 was served by quadrature.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t0: float
    t1: complex
    branch_fallback: bool = False


class ResponseSample(BaseModel):
    """
    Conductivity and permittivity of one model at one query point.

    sigma_ratio is sigma_tr / sigma_0; epsilon is present only when the query
    carries x_p. A failed evaluation keeps NaN values and the error text.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    model: ResponseModel
    sigma_ratio: complex
    epsilon: Optional[complex] = None
    query: DimensionlessQuery
    branch_fallback: bool = False
    error: Optional[str] = None  # Error details if evaluation failed

    @property
    def ok(self) -> bool:
        return self.error is None

    @classmethod
    def failed(cls, model: ResponseModel, query: DimensionlessQuery, error: str) -> "ResponseSample":
        """Sample carrying NaN values for a model whose evaluation raised."""
        return cls(
            model=model,
            sigma_ratio=NAN_COMPLEX,
            epsilon=NAN_COMPLEX if query.x_p is not None else None,
            query=query,
            error=error
        )


class SampleRecord(BaseModel):
    """
    Flat output record shared by CSV rows and JSON objects.

    eps columns are None when x_p was not supplied.
    """
    var: Optional[float] = None  # swept value (None for single-point eval)
    model: ResponseModel
    re_sigma: float
    im_sigma: float
    abs_sigma: float
    re_eps: Optional[float] = None
    im_eps: Optional[float] = None
    q: float
    x: float
    y: float
    xp: Optional[float] = None

    @classmethod
    def from_sample(cls, sample: ResponseSample, var: Optional[float] = None) -> "SampleRecord":
        """Flatten a ResponseSample."""
        sigma = sample.sigma_ratio
        eps = sample.epsilon
        return cls(
            var=var,
            model=sample.model,
            re_sigma=sigma.real,
            im_sigma=sigma.imag,
            abs_sigma=abs(sigma),
            re_eps=eps.real if eps is not None else None,
            im_eps=eps.imag if eps is not None else None,
            q=sample.query.q,
            x=sample.query.x,
            y=sample.query.y,
            xp=sample.query.x_p
        )


# =============================================================================
# SWEEP MODELS
# =============================================================================

class SweepSpec(BaseModel):
    """
    Declarative description of a 1-D parameter sweep.

    The swept variable runs from `start` to `stop` over `points` grid values
    (geometric when log_scale); `fixed` supplies the remaining members of
    {q, x, y, x_p}; output None means standard output.
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    variable: SweepVariable
    start: float = Field(gt=0, alias="from")
    stop: float = Field(gt=0, alias="to")
    points: int = Field(ge=2)
    log_scale: bool = False
    fixed: Dict[str, float] = Field(default_factory=dict)
    models: List[ResponseModel] = Field(default_factory=lambda: list(ResponseModel))
    output: Optional[str] = None

    @model_validator(mode="after")
    def _check_consistency(self) -> "SweepSpec":
        if not self.start < self.stop:
            raise ValueError("from must be < to")
        if self.variable.value in self.fixed:
            raise ValueError(f"swept variable {self.variable.value} must not be fixed")
        unknown = set(self.fixed) - {"q", "x", "y", "x_p"}
        if unknown:
            raise ValueError(f"unknown fixed values: {', '.join(sorted(unknown))}")
        required = {"q", "x", "y"} - {self.variable.value}
        missing = required - set(self.fixed)
        if missing:
            raise ValueError(f"missing fixed values: {', '.join(sorted(missing))}")
        for name, value in self.fixed.items():
            if not value > 0:
                raise ValueError(f"{name} must be > 0")
        if not self.models:
            raise ValueError("at least one model is required")
        return self


# =============================================================================
# VALIDATION MODELS
# =============================================================================

class ValidationCase(BaseModel):
    """
    One checked value in a validation suite.

    metric selects relative or absolute comparison; expect_failure inverts the
    outcome (regression guards); advisory cases never fail a report.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    point: Dict[str, float]
    computed: complex
    reference: complex
    abs_error: float
    rel_error: float
    tolerance: float
    metric: Literal["rel", "abs"] = "rel"
    expect_failure: bool = False
    advisory: bool = False
    passed: bool

    @classmethod
    def compare(
        cls,
        label: str,
        point: Dict[str, float],
        computed: complex,
        reference: complex,
        tolerance: float,
        metric: Literal["rel", "abs"] = "rel",
        expect_failure: bool = False,
        advisory: bool = False,
    ) -> "ValidationCase":
        """Build a case from a computed/reference pair; abs is used when the reference is 0."""
        abs_error = abs(complex(computed) - complex(reference))
        scale = abs(complex(reference))
        rel_error = abs_error / scale if scale > 0 else abs_error
        measured = abs_error if metric == "abs" or scale == 0 else rel_error
        within = bool(measured <= tolerance)  # NaN compares False
        return cls(
            label=label,
            point=point,
            computed=complex(computed),
            reference=complex(reference),
            abs_error=abs_error,
            rel_error=rel_error,
            tolerance=tolerance,
            metric=metric,
            expect_failure=expect_failure,
            advisory=advisory,
            passed=within != expect_failure
        )


class ValidationReport(BaseModel):
    """
    Outcome of a validation suite.

    passed holds exactly when every non-advisory case passed.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    suite: Suite
    tolerance: Optional[float] = None  # None: per-case tolerances from several suites
    cases: List[ValidationCase]
    worst_rel_error: float
    passed: bool

    @classmethod
    def from_cases(cls, suite: Suite, tolerance: Optional[float], cases: List[ValidationCase]) -> "ValidationReport":
        """Assemble a report, keeping case order."""
        graded = [case for case in cases if not case.advisory and not case.expect_failure]
        worst = max((case.rel_error for case in graded), default=0.0)
        return cls(
            suite=suite,
            tolerance=tolerance,
            cases=cases,
            worst_rel_error=worst,
            passed=all(case.passed for case in cases if not case.advisory)
        )

    @property
    def failures(self) -> List[ValidationCase]:
        return [case for case in self.cases if not case.passed and not case.advisory]
