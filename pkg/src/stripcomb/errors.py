"""Exception hierarchy for stripcomb."""


class StripcombError(ValueError):
    """Base class for all errors raised by stripcomb."""


class ParameterRangeError(StripcombError):
    """An index or parameter lies outside the admissible range."""


class VariableMismatchError(StripcombError):
    """Two operands carry different variable tags."""


class InexactDivisionError(StripcombError):
    """A division that must be exact left a remainder."""


class ZeroConstantTermError(StripcombError):
    """A denominator has no invertible constant term in the series variable."""


class NonSquareMatrixError(StripcombError):
    """A determinant was requested for a non-square matrix."""


class DimensionMismatchError(StripcombError):
    """Matrix and vector shapes do not fit together."""


class SingularMinorError(StripcombError):
    """The leading Hankel minor vanishes."""


class TruncationTooSmallError(StripcombError):
    """The series truncation is too short to decide the question asked."""


class InsufficientDataError(StripcombError):
    """Not enough sequence terms for the requested recurrence order."""


class UnknownIdentityError(StripcombError):
    """No identity is registered under the given id."""


class OeisError(StripcombError):
    """An OEIS b-file could not be located or parsed."""
