"""Exception types shared across the package."""


class AreError(Exception):
    """Base class for every error raised by approxre."""


class AlphabetError(AreError, ValueError):
    """A symbol was used outside the declared alphabet."""


class CostFileError(AreError, ValueError):
    """A cost-function file or table is malformed."""


class ParseError(AreError, ValueError):
    """Syntax error in an expression, with the offending position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ResourceError(AreError, RuntimeError):
    """A construction or enumeration exceeded its size ceiling."""


class UnsupportedError(AreError, ValueError):
    """The operation is not defined for this kind of expression or cost."""
