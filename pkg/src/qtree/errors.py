"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class TreeParseError(DomainError):
    """Malformed tree text. ``offset`` is the byte offset of the offending character."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class InvariantViolationError(RuntimeError):
    """An internal self-check failed; some identity that must hold did not."""


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds a configured size cap."""
