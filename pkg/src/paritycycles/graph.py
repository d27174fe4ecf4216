"""Immutable simple undirected graphs, walks on them, and text codecs.

Vertices are dense integers ``0..n-1``.  Edges are dense integers too, assigned
in construction order; each edge stores its endpoints as ``(min, max)``.
Every operation that changes a graph returns a new one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    LoopEdge,
    ParseError,
    UnknownEdge,
    UnknownVertex,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    # adj[v] = ((neighbour, edge id), ...) sorted by neighbour id
    adj: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, compare=False)
    _index: dict = field(repr=False, compare=False, hash=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adj[v]]

    def endpoints(self, e: int) -> tuple[int, int]:
        if not 0 <= e < len(self.edges):
            raise UnknownEdge(e)
        return self.edges[e]

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge joining ``u`` and ``v``; raises UnknownEdge if absent."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise UnknownEdge(f"no edge {u}-{v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def other(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise UnknownVertex(f"vertex {v} is not an endpoint of edge {e}")

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise UnknownVertex(v)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on ``n`` vertices; edge ids follow input order."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    edges: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) with n={n}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in index:
            raise DuplicateEdge(f"edge {key} listed twice")
        eid = len(edges)
        index[key] = eid
        edges.append(key)
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    return Graph(
        n=n,
        edges=tuple(edges),
        adj=tuple(tuple(sorted(a)) for a in adj),
        _index=index,
    )


@dataclass(frozen=True)
class Relabeling:
    """Old-to-new id maps produced by deletions.  Removed ids are absent."""

    vertices: dict[int, int]
    edges: dict[int, int]

    def vertex_back(self) -> dict[int, int]:
        return {new: old for old, new in self.vertices.items()}

    def edge_back(self) -> dict[int, int]:
        return {new: old for old, new in self.edges.items()}


def delete_edge(g: Graph, e: int) -> tuple[Graph, Relabeling]:
    g.endpoints(e)
    emap: dict[int, int] = {}
    kept = []
    for old, pair in enumerate(g.edges):
        if old == e:
            continue
        emap[old] = len(kept)
        kept.append(pair)
    return build_graph(g.n, kept), Relabeling({v: v for v in range(g.n)}, emap)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, Relabeling]:
    g.check_vertex(v)
    vmap = {old: (old if old < v else old - 1) for old in range(g.n) if old != v}
    emap: dict[int, int] = {}
    kept = []
    for old, (a, b) in enumerate(g.edges):
        if v in (a, b):
            continue
        emap[old] = len(kept)
        kept.append((vmap[a], vmap[b]))
    return build_graph(g.n - 1, kept), Relabeling(vmap, emap)


def subdivide_edge(g: Graph, e: int) -> tuple[Graph, int]:
    """Replace edge ``e = {u, v}`` with ``u-w`` and ``w-v`` for a new vertex ``w``.

    ``u-w`` (with ``u`` the smaller endpoint) keeps id ``e``; ``w-v`` gets id
    ``g.m``.  All other ids are unchanged.
    """
    u, v = g.endpoints(e)
    w = g.n
    edges = list(g.edges)
    edges[e] = (u, w)
    edges.append((w, v))
    return build_graph(g.n + 1, edges), w


def smooth_vertex(g: Graph, w: int) -> Graph:
    """Inverse of subdivision: drop degree-2 vertex ``w`` and join its neighbours."""
    g.check_vertex(w)
    if g.degree(w) != 2:
        raise ValueError(f"vertex {w} has degree {g.degree(w)}, expected 2")
    (a, _), (b, _) = g.adj[w]
    if g.has_edge(a, b):
        raise DuplicateEdge(f"smoothing {w} would duplicate edge {a}-{b}")
    h, relabel = delete_vertex(g, w)
    vm = relabel.vertices
    return build_graph(h.n, list(h.edges) + [(vm[a], vm[b])])


def closed_vertex_walk(g: Graph, edges: Sequence[int], start: int) -> list[int]:
    """Vertices visited walking ``edges`` from ``start``; raises if the edges don't chain."""
    verts = [start]
    for e in edges:
        verts.append(g.other(e, verts[-1]))
    return verts


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> Path:
        return Path(self.vertices[::-1], self.edges[::-1])

    def prefix_to(self, vertex: int) -> Path:
        """The subpath from the start up to the first occurrence of ``vertex``."""
        i = self.vertices.index(vertex)
        return Path(self.vertices[: i + 1], self.edges[:i])

    @classmethod
    def from_vertices(cls, g: Graph, vertices: Sequence[int]) -> Path:
        vs = tuple(vertices)
        return cls(vs, tuple(g.edge_id(a, b) for a, b in zip(vs, vs[1:])))

    @classmethod
    def trivial(cls, v: int) -> Path:
        return cls((v,), ())


@dataclass(frozen=True)
class Cycle:
    """Simple cycle; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]`` (cyclically)."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def parity(self) -> int:
        return self.length % 2

    @classmethod
    def from_vertices(cls, g: Graph, vertices: Sequence[int]) -> Cycle:
        vs = tuple(vertices)
        nxt = vs[1:] + vs[:1]
        return cls(vs, tuple(g.edge_id(a, b) for a, b in zip(vs, nxt)))

    def arcs(self, a: int, b: int) -> tuple[Path, Path]:
        """The two paths along the cycle from ``a`` to ``b`` (forward, backward)."""
        k = len(self.vertices)
        i, j = self.vertices.index(a), self.vertices.index(b)
        fwd_v = [self.vertices[(i + s) % k] for s in range((j - i) % k + 1)]
        fwd_e = [self.edges[(i + s) % k] for s in range((j - i) % k)]
        bwd_v = [self.vertices[(i - s) % k] for s in range((i - j) % k + 1)]
        bwd_e = [self.edges[(i - s - 1) % k] for s in range((i - j) % k)]
        return Path(tuple(fwd_v), tuple(fwd_e)), Path(tuple(bwd_v), tuple(bwd_e))

    def rotated_to(self, v: int) -> Cycle:
        i = self.vertices.index(v)
        return Cycle(self.vertices[i:] + self.vertices[:i], self.edges[i:] + self.edges[:i])

    def as_circuit(self) -> Circuit:
        return Circuit(self.vertices + self.vertices[:1], self.edges)


@dataclass(frozen=True)
class Circuit:
    """Closed trail: ``vertices[0] == vertices[-1]`` and no edge repeats."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def parity(self) -> int:
        return self.length % 2


def close_cycle(*pieces: Path) -> Cycle:
    """Concatenate paths end-to-start into a cycle; the last must end where the first began."""
    verts: list[int] = []
    edges: list[int] = []
    for p in pieces:
        if verts and verts[-1] != p.start:
            raise ValueError("path pieces do not chain")
        verts.extend(p.vertices if not verts else p.vertices[1:])
        edges.extend(p.edges)
    if verts[-1] != verts[0]:
        raise ValueError("path pieces do not close")
    return Cycle(tuple(verts[:-1]), tuple(edges))


def close_circuit(*pieces: Path) -> Circuit:
    c = close_cycle(*pieces)
    return Circuit(c.vertices + c.vertices[:1], c.edges)


# ---------------------------------------------------------------- codecs


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: not an integer pair: {raw!r}") from None
    if not rows:
        raise ParseError("empty edge list (missing 'n m' header)")
    (n, m), body = rows[0], rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} follow")
    return build_graph(n, body)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
        return build_graph(int(doc["n"]), [tuple(p) for p in doc["edges"]])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad JSON graph: {exc}") from None


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(p) for p in g.edges]})


def to_dot(g: Graph, highlight_edges: Iterable[int] = (), highlight_vertices: Iterable[int] = ()) -> str:
    hv, he = set(highlight_vertices), set(highlight_edges)
    out = ["graph G {"]
    for v in range(g.n):
        attr = ' [style=filled, fillcolor="#f4a261"]' if v in hv else ""
        out.append(f"  {v}{attr};")
    for e, (u, v) in enumerate(g.edges):
        attr = f' [color="#e63946", penwidth=3, label="{e}"]' if e in he else f' [label="{e}"]'
        out.append(f"  {u} -- {v}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


# --------------------------------------------------------- common graphs


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    """Path on ``k`` vertices."""
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a rim cycle on vertices ``1..rim``."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return build_graph(rim + 1, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
