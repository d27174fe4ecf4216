"""Brute-force reference implementations used only by the tests.

Nothing here imports the package's algorithms; graphs are read through
``g.n`` and ``g.edges`` alone.
"""

from __future__ import annotations

from itertools import combinations, permutations


def edge_set(g):
    return {frozenset(p) for p in g.edges}


def naive_cycles(g):
    """All simple cycles as canonical vertex tuples, via vertex-subset permutations."""
    es = edge_set(g)
    out = set()
    for k in range(3, g.n + 1):
        for subset in combinations(range(g.n), k):
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                seq = (first,) + perm
                if all(frozenset((seq[i], seq[(i + 1) % k])) in es for i in range(k)):
                    out.add(seq)
    return out


def naive_cycles_through(g, kind, ident):
    res = []
    for seq in naive_cycles(g):
        if kind == "vertex" and ident in seq:
            res.append(seq)
        elif kind == "edge":
            pair = frozenset(g.edges[ident])
            k = len(seq)
            if any(frozenset((seq[i], seq[(i + 1) % k])) == pair for i in range(k)):
                res.append(seq)
    return res


def _chain_vertices(g, edges):
    """Vertex sequence of a closed trail given by its edge sequence, or None."""
    k = len(edges)
    if k < 3:
        return None
    first, second = set(g.edges[edges[0]]), set(g.edges[edges[1]])
    common = first & second
    if len(common) != 1:
        return None
    (shared,) = common
    (start,) = first - {shared}
    verts = [start]
    for e in edges:
        a, b = g.edges[e]
        if verts[-1] == a:
            verts.append(b)
        elif verts[-1] == b:
            verts.append(a)
        else:
            return None
    return verts if verts[-1] == verts[0] else None


def naive_closed_trails(g, max_len=None):
    """Closed trails as canonical edge tuples (min over rotations and reversals)."""
    out = {}
    limit = g.m if max_len is None else max_len
    for k in range(3, limit + 1):
        for subset in combinations(range(g.m), k):
            for perm in permutations(subset[1:]):
                seq = (subset[0],) + perm
                verts = _chain_vertices(g, seq)
                if verts is None:
                    continue
                key = min(s[i:] + s[:i] for s in (seq, seq[::-1]) for i in range(k))
                out[key] = verts
    return out


def naive_is_connected(n, edges, removed_vertex=None, removed_edge=None):
    alive = [v for v in range(n) if v != removed_vertex]
    if not alive:
        return False
    adj = {v: set() for v in alive}
    for i, (a, b) in enumerate(edges):
        if i == removed_edge or removed_vertex in (a, b):
            continue
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {alive[0]}, [alive[0]]
    while stack:
        x = stack.pop()
        for y in adj[x] - seen:
            seen.add(y)
            stack.append(y)
    return len(seen) == len(alive)


def naive_two_connected(g):
    if g.n < 3 or not naive_is_connected(g.n, g.edges):
        return False
    return all(naive_is_connected(g.n, g.edges, removed_vertex=v) for v in range(g.n))


def naive_two_edge_connected(g):
    if g.n < 2 or not naive_is_connected(g.n, g.edges):
        return False
    return all(naive_is_connected(g.n, g.edges, removed_edge=e) for e in range(g.m))


def check_path(g, vertices, edges):
    """True iff the sequences form a simple path of g."""
    if len(vertices) != len(edges) + 1 or len(set(vertices)) != len(vertices):
        return False
    for i, e in enumerate(edges):
        if not 0 <= e < g.m or set(g.edges[e]) != {vertices[i], vertices[i + 1]}:
            return False
    return True


def all_simple_paths(g, s, t):
    es = edge_set(g)
    out = []

    def rec(path):
        x = path[-1]
        if x == t:
            out.append(tuple(path))
            return
        for y in range(g.n):
            if y not in path and frozenset((x, y)) in es:
                path.append(y)
                rec(path)
                path.pop()

    rec([s])
    return out
