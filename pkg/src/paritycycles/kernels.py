"""Hot loops of the exhaustive oracle, written for numba over CSR arrays.

The graph is passed as ``indptr, nbr, eid``: the neighbours of ``x`` are
``nbr[indptr[x]:indptr[x+1]]`` and the matching edge ids are in ``eid``.
Every kernel also runs unchanged as Python when JIT is disabled.
"""

from __future__ import annotations

import numpy as np

from ._jit import njit
from .graph import Graph


def to_csr(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + len(g.adj[v])
    nbr = np.empty(2 * g.m, dtype=np.int64)
    eid = np.empty(2 * g.m, dtype=np.int64)
    k = 0
    for v in range(g.n):
        for w, e in g.adj[v]:
            nbr[k] = w
            eid[k] = e
            k += 1
    return indptr, nbr, eid


@njit(cache=True)
def simple_path_counts(indptr, nbr, eid, start, end, banned_edge, min_len):
    """Histogram by length of simple paths from ``start`` that finish on arrival at ``end``.

    With ``start == end`` this counts closed cycles through ``start``, each one
    twice (once per direction).  ``banned_edge`` (or -1) is never traversed.
    """
    n = indptr.shape[0] - 1
    counts = np.zeros(n + 2, dtype=np.int64)
    on_path = np.zeros(n, dtype=np.bool_)
    stack_v = np.empty(n + 1, dtype=np.int64)
    stack_i = np.empty(n + 1, dtype=np.int64)
    depth = 0
    stack_v[0] = start
    stack_i[0] = indptr[start]
    on_path[start] = True
    while depth >= 0:
        x = stack_v[depth]
        i = stack_i[depth]
        if i < indptr[x + 1]:
            stack_i[depth] = i + 1
            e = eid[i]
            if e == banned_edge:
                continue
            y = nbr[i]
            if y == end:
                if depth + 1 >= min_len:
                    counts[depth + 1] += 1
                continue
            if not on_path[y]:
                on_path[y] = True
                depth += 1
                stack_v[depth] = y
                stack_i[depth] = indptr[y]
        else:
            if x != start:
                on_path[x] = False
            depth -= 1
    return counts


@njit(cache=True)
def closed_trail_search(indptr, nbr, eid, m, start, end, used_edge, offset, want_parity):
    """Length of some trail ``start -> end`` whose total length has parity ``want_parity``.

    The total counts ``offset`` extra edges (the pre-traversed ``used_edge``,
    if any) and must be at least 3.  Returns -1 when no such trail exists.
    The trail may pass through ``end`` before it finishes there.
    """
    used = np.zeros(m, dtype=np.bool_)
    if used_edge >= 0:
        used[used_edge] = True
    stack_v = np.empty(m + 1, dtype=np.int64)
    stack_i = np.empty(m + 1, dtype=np.int64)
    stack_e = np.empty(m + 1, dtype=np.int64)
    depth = 0
    stack_v[0] = start
    stack_i[0] = indptr[start]
    stack_e[0] = -1
    while depth >= 0:
        x = stack_v[depth]
        i = stack_i[depth]
        if i < indptr[x + 1]:
            stack_i[depth] = i + 1
            e = eid[i]
            if used[e]:
                continue
            y = nbr[i]
            total = depth + 1 + offset
            if y == end and total >= 3 and total % 2 == want_parity:
                return total
            used[e] = True
            depth += 1
            stack_v[depth] = y
            stack_i[depth] = indptr[y]
            stack_e[depth] = e
        else:
            if depth > 0:
                used[stack_e[depth]] = False
            depth -= 1
    return -1


def cycle_length_histogram(g: Graph, kind: str, ident: int) -> np.ndarray:
    """``hist[L]`` = number of simple cycles of length ``L`` through the vertex/edge."""
    indptr, nbr, eid = to_csr(g)
    if kind == "vertex":
        raw = simple_path_counts(indptr, nbr, eid, ident, ident, -1, 3)
        return raw // 2
    u, w = g.endpoints(ident)
    raw = simple_path_counts(indptr, nbr, eid, w, u, ident, 2)
    hist = np.zeros(raw.shape[0] + 1, dtype=np.int64)
    hist[1:] = raw
    return hist


def find_closed_trail_length(g: Graph, kind: str, ident: int, parity: int) -> int:
    """Length of some closed trail of the given parity through the target, or -1."""
    if g.m == 0:
        return -1
    indptr, nbr, eid = to_csr(g)
    if kind == "vertex":
        return int(closed_trail_search(indptr, nbr, eid, g.m, ident, ident, -1, 0, parity))
    u, w = g.endpoints(ident)
    return int(closed_trail_search(indptr, nbr, eid, g.m, w, u, ident, 1, parity))
