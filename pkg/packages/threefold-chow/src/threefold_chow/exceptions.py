"""Errors raised by the intersection engine."""


class ChowError(Exception):
    """Base class for intersection-engine errors."""


class ModelMismatchError(ChowError, ValueError):
    """Raised when a class does not live on the model it is used with."""


class DegreeError(ChowError, ValueError):
    """Raised when a product does not have total cohomological degree 6."""


class CenterSpecError(ChowError, ValueError):
    """Raised when a blowup center violates its invariants."""


class ParityError(CenterSpecError):
    """Raised when tau and gamma have different parity."""


class IntegralityError(ChowError, ValueError):
    """Raised when a value that must be an integer is not."""
