"""Picard lattice exceptions."""

from src.domain.exceptions.base import DomainValidationError


class InvalidLatticeInvolutionError(DomainValidationError):
    """Matrix is not an involutive isometry fixing the canonical class."""

    reason = "invalid-lattice-involution"


class ReflectionRootError(DomainValidationError):
    """Reflection vector has a square outside {1, 2}."""

    reason = "invalid-root"


class LatticeOutOfScopeError(DomainValidationError):
    """Requested computation is outside the Del Pezzo range."""

    reason = "out-of-scope"


class InvalidTransformationError(DomainValidationError):
    """Elementary transformation request is inconsistent with the model."""

    reason = "invalid-transformation"
