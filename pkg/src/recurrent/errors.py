"""Exception types shared across the package."""


class RecurrentError(Exception):
    """Base class for all errors raised by :mod:`recurrent`."""


class DomainError(RecurrentError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RecurrentError, RuntimeError):
    """A configured size or magnitude budget was exceeded."""


class ParseError(RecurrentError, ValueError):
    """Malformed input file.  ``line`` is 1-based, or ``None`` if unknown."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
