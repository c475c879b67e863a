"""Shared exception types."""

from __future__ import annotations


class CycleError(ValueError):
    """The quiver has a directed cycle, outside the domain of the DAG algorithms."""


class IllFormedError(ValueError):
    """A value violates a structural well-formedness condition."""


class RestrIllFormedError(IllFormedError):
    """A subquiver is not a valid selection from its host quiver."""


class InvalidBipathError(IllFormedError):
    """A bipath's two sides are not same-extremity paths of the quiver."""


class CapExceededError(RuntimeError):
    """An enumeration grew past its configured safety cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds cap of {cap}")
        self.what = what
        self.cap = cap


class SortError(ValueError):
    """A term or formula fails sort checking.

    `reason` is one of: unbound_var, bad_restr, arity_mismatch, arg_sort.
    """

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class BiproofIllFormedError(ValueError):
    """A biproof's halves differ in length or are not pairwise dual."""
