"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Raised for malformed input documents; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetError(ValueError):
    """Raised when an exhaustive routine is asked to exceed its enumeration budget."""


class PreconditionError(ValueError):
    """Raised when a caller-supplied relation violates a stated precondition."""


class TriangleFoundError(PreconditionError):
    """Raised when a triangle-free precondition fails; carries one witness triangle."""

    def __init__(self, triangle: tuple[int, int, int]):
        self.triangle = triangle
        super().__init__(f"underlying graph contains triangle {triangle}")
