"""Exact arithmetic exceptions."""

from src.domain.exceptions.base import DomainValidationError


class ZeroPolynomialError(DomainValidationError):
    """A zero polynomial was given where a nonzero one is required."""

    reason = "zero-polynomial"


class InhomogeneousPolynomialError(DomainValidationError):
    """Terms of different total degree were combined."""

    reason = "inhomogeneous"


class InexactDivisionError(DomainValidationError):
    """Polynomial division left a nonzero remainder."""

    reason = "inexact-division"


class DegenerateQuadraticError(DomainValidationError):
    """Quadratic with vanishing leading coefficient or discriminant."""

    reason = "degenerate-quadratic"
