"""Exception hierarchy shared by all tenscat modules."""


class TenscatError(Exception):
    """Base class for every error raised by tenscat."""


class ResourceBoundError(TenscatError):
    """An input exceeds a configured size bound."""


class DomainError(TenscatError, ValueError):
    """An input lies outside the domain of an operation."""


class InternalConsistencyError(TenscatError, RuntimeError):
    """A self-check failed; this signals a bug, not bad input."""


class ParseError(TenscatError, ValueError):
    """A textual literal could not be parsed.

    ``position`` is the 0-based offset of the offending character in
    ``text``; :meth:`caret_message` renders it for terminal output.
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(message)
        self.message = message
        self.text = text
        self.position = position

    def caret_message(self) -> str:
        return f"{self.message}\n  {self.text}\n  {' ' * self.position}^"


def check_bound(name: str, value: int, bound: int) -> None:
    if value > bound:
        raise ResourceBoundError(f"{name} = {value} exceeds bound {bound}")
