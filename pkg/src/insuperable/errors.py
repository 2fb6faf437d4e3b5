"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Raised when matrix or vector shapes do not line up."""


class DomainError(ValueError):
    """Raised when a numeric precondition fails (message names the inequality)."""


class CapExceeded(ValueError):
    """Raised when an enumeration would exceed its configured dimension cap."""
