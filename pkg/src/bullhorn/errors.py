"""Exception hierarchy shared by every module."""

from __future__ import annotations


class BullhornError(Exception):
    """Base class for all errors raised by the package."""


class InvalidVertexSetError(BullhornError, ValueError):
    """A vertex set refers to ids outside ``0..n-1`` or violates a disjointness requirement."""


class GraphFormatError(BullhornError, ValueError):
    """A serialized graph record could not be decoded.

    ``offset`` is the byte offset (graph6) or line number (DIMACS, edge list)
    at which decoding failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class DecompositionError(BullhornError, ValueError):
    """Raised when a modular-decomposition precondition fails."""

    def __init__(self, condition: str):
        super().__init__(f"decomposition precondition failed: graph is not {condition}")
        self.condition = condition


class BudgetExceededError(BullhornError, ValueError):
    """Raised when a desk-scale exhaustive computation is asked to exceed its vertex budget."""

    def __init__(self, n: int, limit: int):
        super().__init__(f"n={n} exceeds the desk budget of {limit} vertices")
        self.n = n
        self.limit = limit


class NotInClassError(BullhornError, ValueError):
    """The input graph contains a forbidden induced subgraph.

    ``witness`` is the offending :class:`~bullhorn.patterns.Embedding`.
    """

    def __init__(self, witness):
        super().__init__(
            f"graph contains an induced {witness.pattern.value} on {list(witness.vertices)}"
        )
        self.witness = witness
