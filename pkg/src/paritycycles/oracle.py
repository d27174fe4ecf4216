"""Exhaustive ground truth for small graphs, and the independent witness checker.

Enumeration refuses graphs beyond its budget instead of truncating.  The
checker :func:`validate_witness` reads nothing but ``g.n`` and ``g.edges``
so that it cannot inherit a bug from the code that built the witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BudgetExceeded
from .graph import Circuit, Cycle, Graph
from .kernels import cycle_length_histogram, find_closed_trail_length
from .witness import Parity, ParityWitness, Target


@dataclass(frozen=True)
class EnumerationBudget:
    max_vertices: int = 16
    max_edges: int = 24
    max_trail_edges: int = 20

    @classmethod
    def parse(cls, text: str) -> EnumerationBudget:
        v, e, t = (int(x) for x in text.split(","))
        return cls(v, e, t)


DEFAULT_BUDGET = EnumerationBudget()


def _check_budget(g: Graph, budget: EnumerationBudget, trails: bool) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices > budget {budget.max_vertices}")
    limit = budget.max_trail_edges if trails else budget.max_edges
    if g.m > limit:
        raise BudgetExceeded(f"{g.m} edges > {'trail ' if trails else ''}budget {limit}")


def canonical_cycle(g: Graph, vertices: tuple[int, ...]) -> Cycle:
    """Rotate to the smallest vertex and orient so the second vertex is below the last."""
    i = vertices.index(min(vertices))
    vs = vertices[i:] + vertices[:i]
    if len(vs) > 2 and vs[1] > vs[-1]:
        vs = vs[:1] + vs[1:][::-1]
    return Cycle.from_vertices(g, vs)


def canonical_circuit(g: Graph, edges: tuple[int, ...]) -> Circuit:
    """Smallest rotation/reversal of the cyclic edge sequence.

    In a simple graph consecutive edges meet in exactly one vertex, so the edge
    sequence alone determines the trail.
    """
    k = len(edges)
    best = min(
        seq[i:] + seq[:i] for seq in (edges, edges[::-1]) for i in range(k)
    )
    a, b = g.edges[best[0]]
    nxt = set(g.edges[best[1]])
    start = a if b in nxt else b
    verts = [start]
    for e in best:
        x, y = g.edges[e]
        verts.append(y if verts[-1] == x else x)
    return Circuit(tuple(verts), best)


def _contains(obj: Cycle | Circuit, target: Target) -> bool:
    return target.id in (obj.vertices if target.kind == "vertex" else obj.edges)


def all_cycles(g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET) -> list[Cycle]:
    """Every simple cycle, found by DFS from its lowest vertex through higher ones."""
    _check_budget(g, budget, trails=False)
    found: list[Cycle] = []
    for root in range(g.n):
        path = [root]
        on_path = {root}
        stack = [iter(g.adj[root])]
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            y, _ = step
            if y == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(Cycle.from_vertices(g, path))
                continue
            if y > root and y not in on_path:
                path.append(y)
                on_path.add(y)
                stack.append(iter(g.adj[y]))
    found.sort(key=lambda c: (c.length, c.vertices))
    return found


def enumerate_cycles_through(
    g: Graph, target: Target, budget: EnumerationBudget = DEFAULT_BUDGET
) -> list[Cycle]:
    return [c for c in all_cycles(g, budget) if _contains(c, target)]


def all_closed_trails(g: Graph, budget: EnumerationBudget = DEFAULT_BUDGET) -> list[Circuit]:
    """Every closed trail up to rotation and reversal.

    Each class is produced once: started on its smallest edge, traversed from
    that edge's smaller endpoint, using only larger edge ids afterwards.  The
    results are returned in canonical form.
    """
    _check_budget(g, budget, trails=True)
    found: list[Circuit] = []
    used = [False] * g.m
    for e0, (a, b) in enumerate(g.edges):
        used[e0] = True
        verts, edges = [a, b], [e0]
        stack = [iter(g.adj[b])]
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                verts.pop()
                last = edges.pop()
                if last != e0:
                    used[last] = False
                continue
            y, e = step
            if e <= e0 or used[e]:
                continue
            if y == a:
                found.append(canonical_circuit(g, tuple(edges) + (e,)))
            used[e] = True
            verts.append(y)
            edges.append(e)
            stack.append(iter(g.adj[y]))
        used[e0] = False
    found.sort(key=lambda c: (c.length, c.edges))
    return found


def enumerate_closed_trails_through(
    g: Graph, target: Target, budget: EnumerationBudget = DEFAULT_BUDGET
) -> list[Circuit]:
    return [c for c in all_closed_trails(g, budget) if _contains(c, target)]


def cycle_length_counts(g: Graph, target: Target, budget: EnumerationBudget = DEFAULT_BUDGET) -> dict[int, int]:
    """``{length: count}`` of simple cycles through ``target`` (compiled kernel)."""
    _check_budget(g, budget, trails=False)
    hist = cycle_length_histogram(g, target.kind, target.id)
    return {int(L): int(c) for L, c in enumerate(hist) if c}


def exists_parity_cycle(
    g: Graph, target: Target, parity: Parity | str, budget: EnumerationBudget = DEFAULT_BUDGET
) -> bool:
    want = Parity(parity).bit
    return any(L % 2 == want for L in cycle_length_counts(g, target, budget))


def exists_parity_circuit(
    g: Graph, target: Target, parity: Parity | str, budget: EnumerationBudget = DEFAULT_BUDGET
) -> bool:
    _check_budget(g, budget, trails=True)
    return find_closed_trail_length(g, target.kind, target.id, Parity(parity).bit) >= 0


# ------------------------------------------------------------ validation


class Reason(str, enum.Enum):
    OK = "Ok"
    EMPTY = "Empty"
    TOO_SHORT = "TooShort"
    EDGE_NOT_IN_GRAPH = "EdgeNotInGraph"
    VERTEX_NOT_IN_GRAPH = "VertexNotInGraph"
    ENDPOINT_MISMATCH = "EndpointMismatch"
    NOT_CLOSED = "NotClosed"
    REPEATED_VERTEX = "RepeatedVertex"
    REPEATED_EDGE = "RepeatedEdge"
    PARITY_MISMATCH = "ParityMismatch"
    TARGET_MISSING = "TargetMissing"
    BAD_TARGET = "BadTarget"


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: Reason

    def __bool__(self) -> bool:
        return self.ok


def validate_witness(g: Graph, w: ParityWitness) -> Validation:
    def fail(r: Reason) -> Validation:
        return Validation(False, r)

    raw_edges = g.edges
    is_circuit = isinstance(w.object, Circuit)
    verts = list(w.object.vertices)
    edges = list(w.object.edges)
    if not edges or not verts:
        return fail(Reason.EMPTY)
    if is_circuit:
        if len(verts) != len(edges) + 1:
            return fail(Reason.ENDPOINT_MISMATCH)
        if verts[0] != verts[-1]:
            return fail(Reason.NOT_CLOSED)
        steps = list(zip(verts[:-1], verts[1:]))
    else:
        if len(verts) != len(edges):
            return fail(Reason.ENDPOINT_MISMATCH)
        steps = [(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]
    if len(edges) < 3:
        return fail(Reason.TOO_SHORT)
    for x in verts:
        if not (isinstance(x, int) and 0 <= x < g.n):
            return fail(Reason.VERTEX_NOT_IN_GRAPH)
    for e, (a, b) in zip(edges, steps):
        if not (isinstance(e, int) and 0 <= e < len(raw_edges)):
            return fail(Reason.EDGE_NOT_IN_GRAPH)
        if sorted(raw_edges[e]) != sorted((a, b)):
            return fail(Reason.ENDPOINT_MISMATCH)
    if len(set(edges)) != len(edges):
        return fail(Reason.REPEATED_EDGE)
    if not is_circuit and len(set(verts)) != len(verts):
        return fail(Reason.REPEATED_VERTEX)
    if len(edges) % 2 != (0 if w.parity == Parity.EVEN else 1):
        return fail(Reason.PARITY_MISMATCH)
    if w.target.kind == "vertex":
        if w.target.id not in verts:
            return fail(Reason.TARGET_MISSING)
    elif w.target.kind == "edge":
        if w.target.id not in edges:
            return fail(Reason.TARGET_MISSING)
    else:
        return fail(Reason.BAD_TARGET)
    return Validation(True, Reason.OK)
