"""Even and odd cycles and circuits through a prescribed vertex or edge, with certificates."""

from .constructors import (
    circuit_with_parity_through_edge,
    cycle_with_parity_through_edge,
    even_circuit_through_edge,
    even_circuit_through_vertex,
    even_cycle_through_edge,
    even_cycle_through_edge_regular,
    even_cycle_through_odd_degree_vertex,
    even_cycle_through_vertex,
    find_auto,
    odd_circuit_through_edge,
    odd_cycle_through_edge,
    run_theorem,
)
from .errors import HypothesisViolation, InternalContradiction, Violation
from .graph import Circuit, Cycle, Graph, Path, build_graph
from .oracle import EnumerationBudget, validate_witness
from .witness import Parity, ParityWitness, Target

__all__ = [
    "Circuit",
    "Cycle",
    "EnumerationBudget",
    "Graph",
    "HypothesisViolation",
    "InternalContradiction",
    "Parity",
    "ParityWitness",
    "Path",
    "Target",
    "Violation",
    "build_graph",
    "circuit_with_parity_through_edge",
    "cycle_with_parity_through_edge",
    "even_circuit_through_edge",
    "even_circuit_through_vertex",
    "even_cycle_through_edge",
    "even_cycle_through_edge_regular",
    "even_cycle_through_odd_degree_vertex",
    "even_cycle_through_vertex",
    "find_auto",
    "odd_circuit_through_edge",
    "odd_cycle_through_edge",
    "run_theorem",
    "validate_witness",
]
