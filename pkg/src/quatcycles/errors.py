"""Exception types shared across the library."""


class DomainError(ValueError):
    """Raised when an operation is evaluated outside its mathematical domain."""
