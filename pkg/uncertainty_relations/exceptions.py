"""Exceptions raised by the uncertainty-relations modules."""

from typing import Optional


class Error(Exception):
    """Base class for uncertainty-relations exceptions."""
    pass


class DimensionMismatchError(Error):
    """Raised when vector or matrix shapes disagree, or the dimension is below 2."""
    pass


class NonFiniteError(Error):
    """Raised when a vector or matrix has NaN or infinite entries."""
    pass


class ZeroVectorError(Error):
    """Raised when an operation needs a non-zero vector."""
    pass


class NonRealExpectationError(Error):
    """Raised when ⟨ψ|A|ψ⟩ has a non-negligible imaginary part.

    That only happens when a non-Hermitian matrix slipped through validation.
    """
    pass


class ConstraintError(Error):
    """Base class for violated input constraints (normalization, orthogonality…)."""
    pass


class NotNormalizedError(ConstraintError):
    """Raised when a state is expected to have unit norm and does not."""
    pass


class NotOrthogonalError(ConstraintError):
    """Raised when a witness state is not orthogonal to the system state."""
    pass


class ZeroVarianceError(ConstraintError):
    """Raised when a normalized deviation vector is requested for an eigenstate."""
    pass


class NegativeDeficitError(ConstraintError):
    """Raised when ΔA² − |⟨ψ⊥|ψ1⟩|² is negative beyond tolerance.

    The Schwarz inequality forbids that for valid inputs.
    """
    pass


class DegenerateInconsistentError(Error):
    """Raised when a quadratic form has vanishing curvature but a large linear term."""
    pass


class NullPhiVectorError(Error):
    """Raised when φ = ψ1 + (β + iα)ψ2 vanishes and cannot be normalized."""
    pass


class InstanceFileError(Error):
    """Raised when an instance file cannot be parsed or validated.

    :param message: Error message.
    :param field: JSON path of the offending field (e.g. ``A[1][0]``).
    :param line: line number for JSON syntax errors.

    :ivar message: Error message.
    :ivar field: JSON path of the offending field or `None`.
    :ivar line: line number or `None`.
    """

    message: str
    field: Optional[str]
    line: Optional[int]

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        Error.__init__(self, message, field, line)
        self.message = message
        self.field = field
        self.line = line

    def __str__(self):
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        if self.field is not None:
            return f"{self.field}: {self.message}"
        return self.message


__all__ = ["Error", "DimensionMismatchError", "NonFiniteError", "ZeroVectorError",
           "NonRealExpectationError", "ConstraintError", "NotNormalizedError",
           "NotOrthogonalError", "ZeroVarianceError", "NegativeDeficitError",
           "DegenerateInconsistentError", "NullPhiVectorError", "InstanceFileError"]
