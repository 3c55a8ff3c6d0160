"""Shared exception types."""

from __future__ import annotations


class FieldMismatchError(ValueError):
    """Two scalars with distinct irrational discriminants were combined."""


class StrandMismatchError(ValueError):
    """Diagrams or elements on different strand counts were combined."""


class WordParseError(ValueError):
    """A generator word failed to parse; carries the 1-based token position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


class NonInvertibleError(ArithmeticError):
    """An inverse was requested for an element that has none."""


class DegenerateParamsError(ValueError):
    """Parameters fall in the forbidden regime b = 0 with a*c != 0.

    There the mixed braid relation collapses to a^2 c (v_i - v_{i+1}) = 0,
    forcing v_i = v_{i+1}; checking it would silently report failure for a
    reason unrelated to the relation under test, so it is rejected instead.
    """
