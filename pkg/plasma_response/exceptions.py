"""
Exception hierarchy for the plasma response library.
"""

from typing import Optional


class PlasmaResponseError(Exception):
    """Base class for all library errors."""


class DomainError(PlasmaResponseError, ValueError):
    """
    An input lies outside the domain of an operation.

    The offending field is kept on the exception so the CLI can name the flag.
    """

    def __init__(self, field: str, message: Optional[str] = None):
        self.field = field
        super().__init__(message or f"{field} must be > 0")


class ConvergenceError(PlasmaResponseError, RuntimeError):
    """Adaptive quadrature exhausted its subdivision budget."""

    def __init__(self, message: str, estimate: complex, error: float):
        self.estimate = estimate
        self.error = error
        super().__init__(f"{message} (estimate={estimate}, error estimate={error:.3e})")


def require_positive(**values: float) -> None:
    """Raise DomainError for the first non-positive keyword value."""
    for field, value in values.items():
        if not value > 0:
            raise DomainError(field)
