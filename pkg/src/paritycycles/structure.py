"""Hypothesis predicates and their certificates.

Bipartiteness is decided by BFS layering and always comes with a certificate:
a 2-colouring or an odd cycle.  Cut vertices and bridges use the usual
low-link DFS (iterative, so deep paths don't hit the recursion limit).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Cycle, Graph, Path, delete_edge


@dataclass(frozen=True)
class BipartitionCertificate:
    side: tuple[int, ...]

    def validates(self, g: Graph) -> bool:
        return len(self.side) == g.n and all(self.side[u] != self.side[v] for u, v in g.edges)


@dataclass(frozen=True)
class OddCycleCertificate:
    cycle: Cycle

    def validates(self, g: Graph) -> bool:
        c = self.cycle
        k = c.length
        if k < 3 or k % 2 == 0 or len(set(c.vertices)) != k or len(c.vertices) != k:
            return False
        for i, e in enumerate(c.edges):
            if not 0 <= e < g.m or set(g.edges[e]) != {c.vertices[i], c.vertices[(i + 1) % k]}:
                return False
        return True


@dataclass(frozen=True)
class ConnectivityReport:
    components: tuple[tuple[int, ...], ...]
    articulation_vertices: frozenset[int]
    bridges: frozenset[int]


def components(g: Graph, removed_vertex: int | None = None) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    if removed_vertex is not None:
        seen[removed_vertex] = True
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def bfs_tree(
    g: Graph,
    source: int,
    banned_vertices: Iterable[int] = (),
    banned_edges: Iterable[int] = (),
) -> tuple[list[int], list[int]]:
    """BFS from ``source``; returns (parent vertex, parent edge) arrays, -1 if unreached.

    Neighbours are scanned in increasing id order, so trees are reproducible.
    """
    bv, be = set(banned_vertices), set(banned_edges)
    parent = [-1] * g.n
    pedge = [-1] * g.n
    parent[source] = source
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, e in g.adj[x]:
            if parent[y] == -1 and y not in bv and e not in be:
                parent[y] = x
                pedge[y] = e
                queue.append(y)
    return parent, pedge


def _tree_path(parent: list[int], pedge: list[int], source: int, target: int) -> Path:
    verts, edges = [target], []
    while verts[-1] != source:
        x = verts[-1]
        edges.append(pedge[x])
        verts.append(parent[x])
    return Path(tuple(reversed(verts)), tuple(reversed(edges)))


def shortest_path(
    g: Graph,
    source: int,
    target: int,
    banned_vertices: Iterable[int] = (),
    banned_edges: Iterable[int] = (),
) -> Path | None:
    parent, pedge = bfs_tree(g, source, banned_vertices, banned_edges)
    if parent[target] == -1:
        return None
    return _tree_path(parent, pedge, source, target)


def shortest_path_to_set(
    g: Graph,
    source: int,
    targets: Iterable[int],
    banned_vertices: Iterable[int] = (),
) -> Path | None:
    """Shortest path from ``source`` to the nearest member of ``targets``.

    Only the final vertex of the path lies in ``targets``.  Among equally near
    members the one reached first by the BFS wins.
    """
    tset = set(targets)
    if source in tset:
        return Path.trivial(source)
    bv = set(banned_vertices)
    parent = [-1] * g.n
    pedge = [-1] * g.n
    parent[source] = source
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, e in g.adj[x]:
            if parent[y] != -1 or y in bv:
                continue
            parent[y], pedge[y] = x, e
            if y in tset:
                return _tree_path(parent, pedge, source, y)
            queue.append(y)
    return None


def bipartite_or_odd_cycle(g: Graph) -> BipartitionCertificate | OddCycleCertificate:
    depth = [-1] * g.n
    parent = [-1] * g.n
    pedge = [-1] * g.n
    for root in range(g.n):
        if depth[root] != -1:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, e in g.adj[x]:
                if depth[y] == -1:
                    depth[y] = depth[x] + 1
                    parent[y], pedge[y] = x, e
                    queue.append(y)
    for e, (u, w) in enumerate(g.edges):
        if depth[u] % 2 != depth[w] % 2:
            continue
        # BFS edges span at most one layer, so same colour means same layer; climb to the LCA.
        up_u, up_w = [u], [w]
        eu, ew = [], []
        while up_u[-1] != up_w[-1]:
            eu.append(pedge[up_u[-1]])
            up_u.append(parent[up_u[-1]])
            ew.append(pedge[up_w[-1]])
            up_w.append(parent[up_w[-1]])
        # cycle: lca -> ... -> u -e-> w -> ... -> lca
        verts = up_u[::-1] + up_w[:-1]
        edges = eu[::-1] + [e] + ew
        return OddCycleCertificate(Cycle(tuple(verts), tuple(edges)))
    return BipartitionCertificate(tuple(d % 2 for d in depth))


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartite_or_odd_cycle(g), BipartitionCertificate)


def odd_cycle_avoiding_edge(g: Graph, e: int) -> OddCycleCertificate | None:
    h, relabel = delete_edge(g, e)
    cert = bipartite_or_odd_cycle(h)
    if isinstance(cert, BipartitionCertificate):
        return None
    back = relabel.edge_back()
    c = cert.cycle
    return OddCycleCertificate(Cycle(c.vertices, tuple(back[x] for x in c.edges)))


def connectivity_report(g: Graph) -> ConnectivityReport:
    """Components, cut vertices and bridges via one low-link DFS per component."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    bridges: set[int] = set()
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        # frames: (vertex, edge used to enter it, index of next neighbour)
        stack = [(root, -1, 0)]
        while stack:
            x, via, i = stack[-1]
            if i < len(g.adj[x]):
                stack[-1] = (x, via, i + 1)
                y, e = g.adj[x][i]
                if e == via:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = clock
                    clock += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, e, 0))
                else:
                    low[x] = min(low[x], disc[y])
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if low[x] > disc[p]:
                    bridges.add(via)
                if p != root and low[x] >= disc[p]:
                    cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    comps = tuple(tuple(c) for c in components(g))
    return ConnectivityReport(comps, frozenset(cuts), frozenset(bridges))


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    return not connectivity_report(g).articulation_vertices


def is_two_edge_connected(g: Graph) -> bool:
    if g.n < 2 or not is_connected(g):
        return False
    return not connectivity_report(g).bridges


def degrees_divisible_by(g: Graph, k: int) -> bool:
    return all(d % k == 0 for d in g.degrees())


def side_degree_sums(g: Graph, cert: BipartitionCertificate, k: int) -> tuple[int, int]:
    """Degree sums of the two colour classes, reduced mod ``k``."""
    sums = [0, 0]
    for v, d in enumerate(g.degrees()):
        sums[cert.side[v]] += d
    return sums[0] % k, sums[1] % k
