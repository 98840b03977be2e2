"""Exception types shared across the package."""


class HydrofactError(Exception):
    """Base class for all package errors."""


class IncompatibleRadicals(HydrofactError, ArithmeticError):
    """Raised when summing exact scalars from different radical classes."""


class NonPositiveRate(HydrofactError, ValueError):
    pass


class NonPolynomialResult(HydrofactError, ArithmeticError):
    pass


class DomainError(HydrofactError, ValueError):
    """Quantum numbers or indices outside their allowed range."""


class NotHomogeneous(HydrofactError, ValueError):
    pass


class DegreeMismatch(HydrofactError, ValueError):
    pass


class NonPositiveLambda(HydrofactError, ValueError):
    pass


class NegativeLambda(HydrofactError, ValueError):
    pass


class ToleranceNotMet(HydrofactError, ArithmeticError):
    """A numerical check did not reach its requested tolerance."""
