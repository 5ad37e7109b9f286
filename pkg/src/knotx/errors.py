"""Exception types shared across the engine."""

from __future__ import annotations

__all__ = [
    "PDSyntaxError",
    "PDValidationError",
    "UnknownCrossingError",
    "StateLimitError",
    "PreconditionError",
    "TableFormatError",
    "TableConsistencyError",
    "UnknownKnotError",
]


class PDSyntaxError(ValueError):
    """Malformed PD text; carries the character offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PDValidationError(ValueError):
    """Structurally invalid diagram (arc occurrence or cycle consistency)."""


class UnknownCrossingError(ValueError):
    """A crossing id outside the diagram's range."""

    def __init__(self, crossing: int, count: int):
        super().__init__(f"unknown crossing id {crossing}; diagram has {count} crossings")
        self.crossing = crossing


class StateLimitError(RuntimeError):
    """State enumeration refused: too many crossings."""

    def __init__(self, crossings: int, limit: int):
        super().__init__(
            f"state enumeration over {crossings} crossings exceeds the limit of {limit}"
        )
        self.crossings = crossings
        self.limit = limit


class PreconditionError(ValueError):
    """An operation's documented precondition does not hold."""


class TableFormatError(ValueError):
    """Malformed knot-table file; carries a 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TableConsistencyError(ValueError):
    """A table record failed recomputation against the engine."""

    def __init__(self, name: str, message: str):
        super().__init__(f"record {name}: {message}")
        self.name = name


class UnknownKnotError(KeyError):
    """Lookup of a name absent from the loaded table."""
