"""Exception types shared across the package."""


class GenusOneError(ValueError):
    """Base class for domain errors raised by this package."""


class NotationError(GenusOneError):
    """Malformed cycle, one-line or partition text."""


class DomainError(GenusOneError):
    """An input object violates an operation's precondition."""
