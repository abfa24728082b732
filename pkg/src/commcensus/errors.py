"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "DomainError",
    "NotRealizableError",
    "SearchExhaustedError",
    "FactorBudgetError",
]


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class NotRealizableError(DomainError):
    """A requested length or trace is not realized by any admissible geodesic.

    Carries the offending input and, when known, its position in the
    caller's input list.
    """

    def __init__(self, message: str, value=None, index: int | None = None):
        super().__init__(message)
        self.value = value
        self.index = index


class SearchExhaustedError(RuntimeError):
    """A bounded deterministic search ran out of room before succeeding."""

    def __init__(self, message: str, bound: int | None = None):
        super().__init__(message)
        self.bound = bound


class FactorBudgetError(SearchExhaustedError):
    """Factoring exceeded its configured effort budget."""
