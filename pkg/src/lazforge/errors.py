"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called with arguments that violate its contract."""
