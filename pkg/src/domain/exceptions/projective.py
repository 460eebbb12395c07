"""Projective geometry exceptions."""

from src.domain.exceptions.base import DomainValidationError


class ZeroPointError(DomainValidationError):
    """All three homogeneous coordinates are zero."""

    reason = "zero-point"


class IndeterminatePointError(DomainValidationError):
    """A rational map is not defined at the requested point."""

    reason = "indeterminate"


class CompositionError(DomainValidationError):
    """Composition of rational maps vanished identically."""

    reason = "degenerate-composition"


class NotInverseError(DomainValidationError):
    """A map offered as inverse is not a two-sided inverse."""

    reason = "not-inverse"


class CrossRatioError(DomainValidationError):
    """Fewer than three distinct points were given."""

    reason = "cross-ratio-undefined"


class InterpolationError(DomainValidationError):
    """Samples do not determine a unique map of the requested degree."""

    reason = "interpolation-failed"
