"""Exception hierarchy shared by all modules."""

from __future__ import annotations

import enum


class GraphError(ValueError):
    """Base class for malformed graphs or references to missing elements."""


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class ParseError(GraphError):
    pass


class SameEndpoint(GraphError):
    pass


class SameEdge(GraphError):
    pass


class NoPathPair(Exception):
    """Menger machinery found fewer than two disjoint paths."""


class BudgetExceeded(Exception):
    """Exhaustive enumeration refused an input larger than its budget."""


class InvalidParams(ValueError):
    pass


class GenerationFailed(RuntimeError):
    pass


class InternalContradiction(AssertionError):
    """A state the theorem rules out was reached; this is a bug."""


class Violation(str, enum.Enum):
    NOT_TWO_CONNECTED = "NotTwoConnected"
    NOT_TWO_EDGE_CONNECTED = "NotTwoEdgeConnected"
    BIPARTITE = "Bipartite"
    DEGREE_NOT_DIVISIBLE = "DegreeNotDivisible"
    DEGREE_TOO_SMALL = "DegreeTooSmall"
    DEGREE_EVEN = "DegreeEven"
    EDGE_ON_GIVEN_ODD_CYCLE = "EdgeOnGivenOddCycle"
    # No odd cycle of the graph avoids the target edge; needed to pick C automatically.
    NO_ODD_CYCLE_AVOIDING_EDGE = "NoOddCycleAvoidingEdge"


class HypothesisViolation(Exception):
    """The input does not satisfy the hypotheses of the requested theorem."""

    def __init__(self, which: Violation, theorem: str | None = None, detail: str = ""):
        self.which = Violation(which)
        self.theorem = theorem
        self.detail = detail
        msg = self.which.value
        if theorem:
            msg = f"{theorem}: {msg}"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)

    def to_dict(self) -> dict:
        return {"violation": self.which.value, "theorem": self.theorem, "detail": self.detail}
