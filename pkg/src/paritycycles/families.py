"""Generators for the necessity counterexamples and for random hypothesis-satisfying inputs.

Counterexamples are defined by the property they must exhibit (for example
"the shared edge lies only on odd cycles"); tests confirm each property with
the exhaustive oracle rather than trusting the construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import GenerationFailed, InvalidParams
from .graph import Graph, build_graph
from .structure import degrees_divisible_by, is_two_connected, is_two_edge_connected
from .witness import Target


class Family(str, enum.Enum):
    PENDANT_ON_ODD_CYCLE = "pendant-on-odd-cycle"
    ODD_BOOK = "odd-book"
    REGULAR_WITH_BRIDGE = "regular-with-bridge"
    FRIENDSHIP = "friendship"
    RANDOM_TWO_CONNECTED = "random-two-connected"
    RANDOM_K_REGULAR_TWO_CONNECTED = "random-k-regular-two-connected"
    RANDOM_DIVISIBLE_DEGREE = "random-divisible-degree"
    RANDOM_TWO_EDGE_CONNECTED_ODD_VERTEX = "random-two-edge-connected-odd-vertex"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: dict[str, int] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    target: Target
    # every designated element by name, e.g. {"shared": "edge:0,1"}
    names: dict[str, str]
    spec: FamilySpec


DEFAULT_ATTEMPTS = 20000


def _param(spec: FamilySpec, name: str, default: int | None = None) -> int:
    if name in spec.params:
        return int(spec.params[name])
    if default is None:
        raise InvalidParams(f"{spec.family.value} needs parameter {name!r}")
    return default


def _edge_label(g: Graph, e: int) -> str:
    u, v = g.edges[e]
    return f"edge:{u},{v}"


def pendant_on_odd_cycle(length: int) -> tuple[Graph, dict[str, Target]]:
    if length < 3 or length % 2 == 0:
        raise InvalidParams(f"cycle length must be odd and >= 3, got {length}")
    edges = [(i, (i + 1) % length) for i in range(length)] + [(0, length)]
    g = build_graph(length + 1, edges)
    return g, {"bridge": Target.edge(length), "pendant": Target.vertex(length), "hub": Target.vertex(0)}


def odd_book(pages: int, page: int) -> tuple[Graph, dict[str, Target]]:
    """``pages`` odd cycles of length ``page`` sharing the spine edge 0-1."""
    if pages < 2:
        raise InvalidParams(f"need at least 2 pages, got {pages}")
    if page < 3 or page % 2 == 0:
        raise InvalidParams(f"page length must be odd and >= 3, got {page}")
    edges = [(0, 1)]
    n = 2
    for _ in range(pages):
        inner = list(range(n, n + page - 2))
        n += page - 2
        chain = [0] + inner + [1]
        edges += list(zip(chain, chain[1:]))
    return build_graph(n, edges), {"shared": Target.edge(0)}


def _bridge_gadget(k: int, offset: int) -> tuple[list[tuple[int, int]], int]:
    """K_{k+2} minus r-a, r-b and a perfect matching on the other k-1 vertices.

    Vertex ``offset`` (r) ends with degree k-1, all others with degree k.
    """
    r, a, b = offset, offset + 1, offset + 2
    rest = list(range(offset + 3, offset + k + 2))
    removed = {(r, a), (r, b)} | {(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)}
    verts = list(range(offset, offset + k + 2))
    edges = [(x, y) for i, x in enumerate(verts) for y in verts[i + 1:] if (x, y) not in removed]
    return edges, r


def regular_with_bridge(k: int) -> tuple[Graph, dict[str, Target]]:
    if k < 3 or k % 2 == 0:
        raise InvalidParams(f"k must be odd and >= 3, got {k}")
    left, r1 = _bridge_gadget(k, 0)
    right, r2 = _bridge_gadget(k, k + 2)
    g = build_graph(2 * (k + 2), left + right + [(r1, r2)])
    return g, {"bridge": Target.edge(g.edge_id(r1, r2))}


def friendship(t: int) -> tuple[Graph, dict[str, Target]]:
    if t < 2:
        raise InvalidParams(f"need at least 2 triangles, got {t}")
    edges = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (a, b), (0, b)]
    return build_graph(2 * t + 1, edges), {"center": Target.vertex(0)}


# ----------------------------------------------------------------- random


def random_regular_pairing(n: int, k: int, rng: np.random.Generator, attempts: int = DEFAULT_ATTEMPTS) -> Graph:
    """Pairing model: shuffle ``n*k`` stubs, pair them up, reject loops and multi-edges."""
    if (n * k) % 2 or not 0 < k < n:
        raise InvalidParams(f"no {k}-regular graph on {n} vertices")
    stubs = np.repeat(np.arange(n), k)
    for _ in range(attempts):
        perm = rng.permutation(stubs)
        pairs = perm.reshape(-1, 2)
        pairs.sort(axis=1)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        keys = pairs[:, 0] * n + pairs[:, 1]
        if np.unique(keys).size != keys.size:
            continue
        return build_graph(n, sorted(map(tuple, pairs.tolist())))
    raise GenerationFailed(f"pairing model found no simple {k}-regular graph on {n} vertices")


def _gnp(n: int, p: float, rng: np.random.Generator) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    return build_graph(n, list(zip(iu[keep].tolist(), ju[keep].tolist())))


def _glue(a: Graph, b: Graph, pairs: list[tuple[int, int]]) -> Graph:
    """Disjoint union of ``a`` and ``b`` with vertex ``pairs[i][1]`` of b identified to ``pairs[i][0]`` of a."""
    ident = dict((y, x) for x, y in pairs)
    remap = {}
    nxt = a.n
    for y in range(b.n):
        if y in ident:
            remap[y] = ident[y]
        else:
            remap[y] = nxt
            nxt += 1
    edges = list(a.edges) + [(remap[x], remap[y]) for x, y in b.edges]
    return build_graph(nxt, edges)


def random_two_connected(n: int, rng: np.random.Generator, p: float | None = None, attempts: int = DEFAULT_ATTEMPTS) -> Graph:
    if n < 3:
        raise InvalidParams("2-connected graphs need at least 3 vertices")
    for _ in range(attempts):
        prob = p if p is not None else rng.uniform(0.25, 0.8)
        g = _gnp(n, prob, rng)
        if is_two_connected(g):
            return g
    raise GenerationFailed(f"no 2-connected G({n}, p) sample in {attempts} attempts")


def random_k_regular_two_connected(n: int, k: int, rng: np.random.Generator, attempts: int = DEFAULT_ATTEMPTS) -> Graph:
    if k < 3:
        raise InvalidParams(f"k must be >= 3, got {k}")
    for _ in range(attempts):
        g = random_regular_pairing(n, k, rng, attempts)
        if is_two_connected(g):
            return g
    raise GenerationFailed(f"no 2-connected {k}-regular graph on {n} vertices")


def random_divisible_degree(
    n: int, k: int, rng: np.random.Generator, glue: int = 2, attempts: int = DEFAULT_ATTEMPTS
) -> Graph:
    """Two random k-regular blobs on ``n`` vertices each, glued along ``glue`` vertex pairs.

    Glued vertices get degree 2k, the rest keep degree k.  Gluing along two
    non-adjacent pairs keeps 2-connectivity; gluing at one vertex leaves a
    cut vertex but no bridge (a 2-edge-connected input for the circuit case).
    """
    if glue not in (1, 2):
        raise InvalidParams("glue must be 1 or 2")
    for _ in range(attempts):
        a = random_k_regular_two_connected(n, k, rng, attempts)
        b = random_k_regular_two_connected(n, k, rng, attempts)
        if glue == 1:
            pairs = [(int(rng.integers(a.n)), int(rng.integers(b.n)))]
        else:
            pa = _non_adjacent_pair(a, rng)
            pb = _non_adjacent_pair(b, rng)
            if pa is None or pb is None:
                continue
            pairs = list(zip(pa, pb))
        g = _glue(a, b, pairs)
        ok = is_two_connected(g) if glue == 2 else is_two_edge_connected(g)
        if ok and degrees_divisible_by(g, k):
            return g
    raise GenerationFailed("could not glue a divisible-degree graph")


def _non_adjacent_pair(g: Graph, rng: np.random.Generator) -> tuple[int, int] | None:
    cand = [(x, y) for x in range(g.n) for y in range(x + 1, g.n) if not g.has_edge(x, y)]
    if not cand:
        return None
    return cand[int(rng.integers(len(cand)))]


def random_two_edge_connected_odd_vertex(n: int, rng: np.random.Generator, attempts: int = DEFAULT_ATTEMPTS) -> tuple[Graph, int]:
    """2-edge-connected graph plus its lowest-id odd-degree vertex.

    Half the samples (by coin flip) glue two random blobs at one vertex, so
    inputs without 2-connectivity are covered as well.
    """
    for _ in range(attempts):
        if n >= 6 and rng.random() < 0.5:
            left = int(rng.integers(3, n - 2))
            a = _gnp(left, rng.uniform(0.4, 0.9), rng)
            b = _gnp(n - left + 1, rng.uniform(0.4, 0.9), rng)
            g = _glue(a, b, [(int(rng.integers(a.n)), int(rng.integers(b.n)))])
        else:
            g = _gnp(n, rng.uniform(0.25, 0.8), rng)
        if not is_two_edge_connected(g):
            continue
        odd = [v for v in range(g.n) if g.degree(v) % 2]
        if odd:
            return g, odd[0]
    raise GenerationFailed("no 2-edge-connected sample with an odd-degree vertex")


def generate(spec: FamilySpec, attempts: int = DEFAULT_ATTEMPTS) -> FamilyInstance:
    """Build the family member described by ``spec`` with its designated target."""
    fam = spec.family
    rng = np.random.default_rng(spec.seed)
    if fam is Family.PENDANT_ON_ODD_CYCLE:
        g, named = pendant_on_odd_cycle(_param(spec, "length", 3))
        main = "bridge"
    elif fam is Family.ODD_BOOK:
        g, named = odd_book(_param(spec, "p", 2), _param(spec, "page", 3))
        main = "shared"
    elif fam is Family.REGULAR_WITH_BRIDGE:
        g, named = regular_with_bridge(_param(spec, "k", 3))
        main = "bridge"
    elif fam is Family.FRIENDSHIP:
        g, named = friendship(_param(spec, "t", 2))
        main = "center"
    elif fam is Family.RANDOM_TWO_CONNECTED:
        g = random_two_connected(_param(spec, "n", 8), rng, attempts=attempts)
        named, main = {"edge0": Target.edge(0)}, "edge0"
    elif fam is Family.RANDOM_K_REGULAR_TWO_CONNECTED:
        g = random_k_regular_two_connected(_param(spec, "n", 10), _param(spec, "k", 3), rng, attempts)
        named, main = {"edge0": Target.edge(0)}, "edge0"
    elif fam is Family.RANDOM_DIVISIBLE_DEGREE:
        g = random_divisible_degree(_param(spec, "n", 8), _param(spec, "k", 3), rng, _param(spec, "glue", 2), attempts)
        named, main = {"edge0": Target.edge(0)}, "edge0"
    elif fam is Family.RANDOM_TWO_EDGE_CONNECTED_ODD_VERTEX:
        g, v = random_two_edge_connected_odd_vertex(_param(spec, "n", 8), rng, attempts)
        named, main = {"odd_vertex": Target.vertex(v)}, "odd_vertex"
    else:  # pragma: no cover
        raise InvalidParams(f"unknown family {fam}")
    labels = {
        name: (_edge_label(g, t.id) if t.kind == "edge" else f"vertex:{t.id}") for name, t in named.items()
    }
    return FamilyInstance(g, named[main], labels, spec)


def parse_params(text: str) -> dict[str, int]:
    """``"p=3,page=5"`` -> ``{"p": 3, "page": 5}``."""
    out: dict[str, int] = {}
    if not text:
        return out
    for item in text.split(","):
        name, sep, value = item.partition("=")
        if not sep:
            raise InvalidParams(f"bad parameter {item!r}; expected name=value")
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise InvalidParams(f"parameter {name!r} is not an integer") from None
    return out
