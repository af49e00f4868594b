"""Exception hierarchy shared by every charp module."""


class CharPError(Exception):
    """Base class for library errors."""


class ContextMismatch(CharPError, ValueError):
    """Operands live in rings with different characteristic or variables."""


class ResourceBoundExceeded(CharPError):
    """A configured degree, level or search bound would be exceeded."""


class DegenerateInput(CharPError, ValueError):
    """An operation has no meaningful answer for the given input (e.g. (0 : 0))."""


class UnsupportedRing(CharPError, ValueError):
    """The operation is not defined on this kind of ring context."""


class NotInvariant(CharPError, ValueError):
    """A proposed generator is not fixed by the group action."""


class ParseError(CharPError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class DegenerateInputWarning(UserWarning):
    """A conventional answer was returned for degenerate input."""
