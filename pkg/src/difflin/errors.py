"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class DiffLinError(Exception):
    """Base class for all errors raised by difflin."""


class ParseError(DiffLinError):
    def __init__(self, message: str, pos: int | None = None, src: str | None = None):
        self.pos = pos
        self.src = src
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class UnknownNameError(DiffLinError):
    pass


class TypeCheckError(DiffLinError):
    pass


class SemiringError(DiffLinError):
    """An operation the coefficient semiring cannot perform (negation, a literal)."""


class UnboundedError(DiffLinError):
    """Raised when a requested evaluation would need an infinite interior sum."""


class GraphError(DiffLinError):
    pass
