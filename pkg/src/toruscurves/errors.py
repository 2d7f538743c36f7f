"""Exception types shared across the package."""


class TorusCurvesError(Exception):
    """Base class for all package-specific errors."""


class InvalidShape(TorusCurvesError):
    """Entry count does not match n*(n-1)/2, or sizes disagree."""


class InvalidPermutation(TorusCurvesError):
    """The given index map is not a bijection of 1..n."""


class DomainError(TorusCurvesError):
    """Argument outside the mathematical domain of the operation."""


class PreconditionViolated(TorusCurvesError):
    """Caller skipped a required earlier pipeline stage."""


class NotInvertible(TorusCurvesError):
    """No inverse exists in the requested residue ring."""


class InvalidModuli(TorusCurvesError):
    """CRT moduli are not pairwise coprime."""


class ConstraintViolation(TorusCurvesError):
    """A solution parameter lies outside its allowed residue classes."""


class InvalidMatrix(TorusCurvesError):
    """Matrix is not in SL(2,Z)."""
