"""Exception hierarchy shared by all modules."""


class HStarError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HStarError, ValueError):
    """Input lies outside the domain of an operation (e.g. non-reflexive polytope)."""


class InvalidDegreeError(DomainError):
    pass


class UnsupportedInputError(DomainError):
    pass


class ResourceError(HStarError):
    """A configured resource cap (dimension, box volume, graph size) would be exceeded."""


class NonIntegralError(HStarError, ArithmeticError):
    """An average that must be an integer polynomial is not.

    This always indicates a bug or a violated precondition; results are never rounded.
    """


class VerificationError(HStarError):
    """Two independent computations of the same quantity disagree."""


class NotLocallyAntiBlockingError(VerificationError):
    """Orthant pieces do not glue to a polytope whose orthant slices are the pieces."""
