class PreconditionError(ValueError):
    """Raised when the inputs of a check violate its stated preconditions."""
