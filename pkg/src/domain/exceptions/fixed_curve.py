"""Fixed curve and classification exceptions."""

from src.domain.exceptions.base import DomainValidationError


class IdentityMapError(DomainValidationError):
    """The identity map has no fixed curve to extract."""

    reason = "identity-map"


class NotInvolutiveError(DomainValidationError):
    """The map composed with itself is not the identity."""

    reason = "not-involutive"


class NegativeGenusError(DomainValidationError):
    """Degree and multiplicities are inconsistent."""

    reason = "negative-genus"


class InvariantMismatchError(DomainValidationError):
    """Recomputed data disagrees with the record metadata."""

    reason = "invariant-mismatch"


class UnrecognizedInvolutionError(DomainValidationError):
    """Raw map matches no recognised involution profile."""

    reason = "unrecognized"


class InvalidMultiplicityError(DomainValidationError):
    """A listed singular point has multiplicity below two."""

    reason = "invalid-multiplicity"
