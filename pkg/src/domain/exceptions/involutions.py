"""Involution construction exceptions."""

from src.domain.exceptions.base import DomainValidationError


class InvalidCurveError(DomainValidationError):
    """The curve and center do not define a De Jonquieres involution."""

    reason = "invalid-curve"


class DegenerateConfigurationError(DomainValidationError):
    """Point configuration fails a general position check."""

    reason = "degenerate-configuration"


class ResidualExtractionError(DomainValidationError):
    """Residual point could not be isolated within the retry budget."""

    reason = "residual-extraction-failed"
