"""Two disjoint paths between vertices or between edges, via unit-capacity flow.

Vertex-disjoint mode splits every vertex ``x`` into ``x_in -> x_out`` with
capacity 1; edge-disjoint mode puts capacity 1 on each direction of every
edge.  Two BFS augmentations are enough, and neighbours are scanned in id
order so the result is deterministic.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .errors import NoPathPair, SameEdge, SameEndpoint
from .graph import Graph, Path, subdivide_edge


class Mode(str, enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class DisjointPathPair:
    first: Path
    second: Path
    mode: Mode


class _UnitFlow:
    """Residual network with unit capacities, arcs added in deterministic order."""

    def __init__(self, size: int):
        self.out: list[list[int]] = [[] for _ in range(size)]
        self.head: list[int] = []
        self.cap: list[int] = []
        self.label: list[int] = []  # graph edge id carried by a forward arc, -1 otherwise

    def add_arc(self, a: int, b: int, label: int = -1) -> None:
        # arc i and its reverse i ^ 1
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(1)
        self.label.append(label)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)
        self.label.append(-1)

    def augment(self, s: int, t: int) -> bool:
        via = [-1] * len(self.out)
        seen = [False] * len(self.out)
        seen[s] = True
        queue = deque([s])
        while queue and not seen[t]:
            x = queue.popleft()
            for arc in self.out[x]:
                y = self.head[arc]
                if self.cap[arc] > 0 and not seen[y]:
                    seen[y] = True
                    via[y] = arc
                    queue.append(y)
        if not seen[t]:
            return False
        x = t
        while x != s:
            arc = via[x]
            self.cap[arc] -= 1
            self.cap[arc ^ 1] += 1
            x = self.head[arc ^ 1]
        return True

    def flow_arcs(self) -> list[int]:
        """Forward arcs ``i`` carrying one unit (even ids are forward)."""
        return [i for i in range(0, len(self.head), 2) if self.cap[i] == 0]


def _strip_loops(vertices: list[int], edges: list[int]) -> tuple[list[int], list[int]]:
    """Shortcut every revisit so the walk becomes a simple path."""
    out_v, out_e = [vertices[0]], []
    pos = {vertices[0]: 0}
    for v, e in zip(vertices[1:], edges):
        if v in pos:
            cut = pos[v]
            for dropped in out_v[cut + 1:]:
                del pos[dropped]
            del out_v[cut + 1:]
            del out_e[cut:]
        else:
            pos[v] = len(out_v)
            out_v.append(v)
            out_e.append(e)
    return out_v, out_e


def _decompose(g: Graph, used: list[tuple[int, int, int]], s: int, t: int) -> list[Path]:
    """Split a 2-unit s-t flow, given as directed (tail, head, edge) steps, into two paths."""
    # antiparallel units on the same edge cancel
    by_edge: dict[int, list[tuple[int, int, int]]] = {}
    for step in used:
        by_edge.setdefault(step[2], []).append(step)
    outgoing: dict[int, list[tuple[int, int]]] = {}
    for e, steps in by_edge.items():
        if len(steps) == 2:
            continue
        a, b, _ = steps[0]
        outgoing.setdefault(a, []).append((b, e))
    for lst in outgoing.values():
        lst.sort()
    paths = []
    for _ in range(2):
        verts, edges = [s], []
        while verts[-1] != t:
            b, e = outgoing[verts[-1]].pop(0)
            verts.append(b)
            edges.append(e)
        v2, e2 = _strip_loops(verts, edges)
        paths.append(Path(tuple(v2), tuple(e2)))
    return paths


def two_vertex_disjoint_paths(g: Graph, s: int, t: int) -> DisjointPathPair | None:
    """Two internally vertex-disjoint ``s``-``t`` paths, or None if none exist."""
    if s == t:
        raise SameEndpoint(s)
    g.check_vertex(s)
    g.check_vertex(t)
    net = _UnitFlow(2 * g.n)
    for x in range(g.n):
        net.add_arc(2 * x, 2 * x + 1)
    for x in range(g.n):
        for y, e in g.adj[x]:
            net.add_arc(2 * x + 1, 2 * y, e)
    src, sink = 2 * s + 1, 2 * t
    for _ in range(2):
        if not net.augment(src, sink):
            return None
    steps = []
    for arc in net.flow_arcs():
        e = net.label[arc]
        if e >= 0:
            steps.append((net.head[arc ^ 1] // 2, net.head[arc] // 2, e))
    p, q = _decompose(g, steps, s, t)
    return DisjointPathPair(p, q, Mode.VERTEX)


def two_edge_disjoint_paths(g: Graph, s: int, t: int) -> DisjointPathPair | None:
    """Two edge-disjoint simple ``s``-``t`` paths, or None if none exist."""
    if s == t:
        raise SameEndpoint(s)
    g.check_vertex(s)
    g.check_vertex(t)
    net = _UnitFlow(g.n)
    for x in range(g.n):
        for y, e in g.adj[x]:
            net.add_arc(x, y, e)
    for _ in range(2):
        if not net.augment(s, t):
            return None
    steps = [(net.head[a ^ 1], net.head[a], net.label[a]) for a in net.flow_arcs()]
    p, q = _decompose(g, steps, s, t)
    return DisjointPathPair(p, q, Mode.EDGE)


def disjoint_paths(g: Graph, s: int, t: int, mode: Mode | str) -> DisjointPathPair | None:
    if Mode(mode) is Mode.VERTEX:
        return two_vertex_disjoint_paths(g, s, t)
    return two_edge_disjoint_paths(g, s, t)


def edge_to_edge_disjoint_paths(
    g: Graph, e: int, f: int, mode: Mode | str = Mode.VERTEX
) -> tuple[Path, Path]:
    """Disjoint paths joining the endpoints of ``e`` to the endpoints of ``f``.

    Both edges are subdivided and two disjoint paths are found between the new
    vertices.  The first returned path starts at the smaller endpoint of ``e``,
    the second at the larger; each ends at an endpoint of ``f`` and neither
    uses ``e`` or ``f``.  A path has length 0 when its start already lies on
    ``f``.  Raises NoPathPair if the flow saturates at one unit.
    """
    if e == f:
        raise SameEdge(e)
    u, v = g.endpoints(e)
    g.endpoints(f)
    h, a = subdivide_edge(g, e)
    h, b = subdivide_edge(h, f)
    pair = disjoint_paths(h, a, b, mode)
    if pair is None:
        raise NoPathPair(f"fewer than two {Mode(mode).value}-disjoint paths between edges {e} and {f}")
    real = g.m  # ids >= g.m and the reused ids e, f are subdivision halves
    halves = {e, f}
    stripped = []
    for p in (pair.first, pair.second):
        verts = p.vertices[1:-1]
        edges = p.edges[1:-1]
        assert all(x not in halves and x < real for x in edges)
        stripped.append(Path(tuple(verts), tuple(edges)))
    stripped.sort(key=lambda p: p.start)
    from_u, from_v = stripped
    assert from_u.start == u and from_v.start == v
    return from_u, from_v
