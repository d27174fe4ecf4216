"""Constructive parity cycles and circuits through a prescribed edge or vertex.

Every public function checks the hypotheses of one theorem, raises
:class:`HypothesisViolation` if they fail, and otherwise returns a
:class:`ParityWitness`.  The theorem tags are:

=======  ==========================================================  =========
tag      hypotheses                                                  returns
=======  ==========================================================  =========
thm0     2-connected, odd cycle C given, e not on C                  cycle through e, either parity
cor1     2-connected, non-bipartite                                  odd cycle through e
thm1     2-connected, every degree divisible by some k >= 3          even cycle through e
corthm1  2-connected, k-regular, k >= 3                              even cycle through e
thm2     2-connected, d(v) >= 3                                      even cycle through v
thm3     2-edge-connected, d(v) odd                                  even cycle through v
thm00    2-edge-connected, odd cycle C given, e not on C             circuit through e, either parity
thm5     2-edge-connected, degrees divisible by k >= 3               even circuit through e
thm6     2-edge-connected, d(v) >= 3                                 even circuit through v
thm7     2-edge-connected, non-bipartite                             odd circuit through e
=======  ==========================================================  =========
"""

from __future__ import annotations

from .errors import HypothesisViolation, InternalContradiction, NoPathPair, Violation
from .graph import Circuit, Cycle, Graph, Path, close_circuit, close_cycle
from .paths import Mode, edge_to_edge_disjoint_paths
from .structure import (
    BipartitionCertificate,
    OddCycleCertificate,
    bipartite_or_odd_cycle,
    components,
    degrees_divisible_by,
    is_two_connected,
    is_two_edge_connected,
    odd_cycle_avoiding_edge,
    shortest_path,
    shortest_path_to_set,
)
from .witness import Parity, ParityWitness, Target


def _require_two_connected(g: Graph, tag: str) -> None:
    if not is_two_connected(g):
        raise HypothesisViolation(Violation.NOT_TWO_CONNECTED, tag)


def _require_two_edge_connected(g: Graph, tag: str) -> None:
    if not is_two_edge_connected(g):
        raise HypothesisViolation(Violation.NOT_TWO_EDGE_CONNECTED, tag)


def _require_off_cycle(g: Graph, e: int, c: OddCycleCertificate, tag: str) -> None:
    if not c.validates(g):
        raise ValueError("odd cycle certificate does not validate against the graph")
    if e in c.cycle.edges:
        raise HypothesisViolation(Violation.EDGE_ON_GIVEN_ODD_CYCLE, tag)


def _first_on(p: Path, on: set[int]) -> Path:
    """Trim ``p`` just after its first vertex in ``on``."""
    for v in p.vertices:
        if v in on:
            return p.prefix_to(v)
    raise InternalContradiction("path never reaches the odd cycle")


def _attach_to_odd_cycle(g: Graph, e: int, c: Cycle, mode: Mode, tag: str) -> tuple[Path, Path]:
    """Paths P', Q' from the ends of ``e`` to ``c``, each meeting ``c`` only at its last vertex.

    Subdividing two edges keeps the graph 2-(edge-)connected, so a missing
    path pair is reported against the input rather than as a bug.
    """
    f = min(c.edges)
    try:
        from_u, from_v = edge_to_edge_disjoint_paths(g, e, f, mode)
    except NoPathPair as exc:
        which = Violation.NOT_TWO_CONNECTED if mode is Mode.VERTEX else Violation.NOT_TWO_EDGE_CONNECTED
        raise HypothesisViolation(which, tag, str(exc)) from exc
    on = set(c.vertices)
    return _first_on(from_u, on), _first_on(from_v, on)


def cycle_with_parity_through_edge(
    g: Graph, e: int, c: OddCycleCertificate, want: Parity | str = Parity.EVEN
) -> ParityWitness:
    """Cycle through ``e`` of parity ``want``, rerouted through the odd cycle ``c``.

    The two arcs of ``c`` between the attachment points have opposite parities,
    so exactly one of them closes ``e + P' + arc + Q'`` with the wanted parity.
    When an endpoint of ``e`` already lies on ``c`` the corresponding trimmed
    path is empty; when ``e`` is a chord both are.
    """
    want = Parity(want)
    _require_two_connected(g, "thm0")
    _require_off_cycle(g, e, c, "thm0")
    u, v = g.endpoints(e)
    p, q = _attach_to_odd_cycle(g, e, c.cycle, Mode.VERTEX, "thm0")
    ui, vj = p.end, q.end
    if ui == vj:
        raise InternalContradiction("vertex-disjoint paths met the cycle at the same vertex")
    edge_e = Path((v, u), (e,))
    for arc in c.cycle.arcs(ui, vj):
        cyc = close_cycle(edge_e, p, arc, q.reversed())
        if Parity.of(cyc.length) is want:
            return ParityWitness(
                cyc,
                Target.edge(e),
                want,
                "thm0",
                {"attach": [ui, vj], "trim_lengths": [p.length, q.length], "odd_cycle": list(c.cycle.vertices)},
            )
    raise InternalContradiction("both arcs of an odd cycle have the same parity")


def circuit_with_parity_through_edge(
    g: Graph, e: int, c: OddCycleCertificate, want: Parity | str = Parity.EVEN
) -> ParityWitness:
    """Closed trail through ``e`` of parity ``want`` from edge-disjoint attachments.

    Edge-disjoint paths may reach ``c`` at the same vertex.  Then the trail
    ``e + P' + Q'`` either already has the wanted parity, or ``c`` is spliced
    in at that vertex to flip it; the edges of ``c`` are untouched by ``P'``
    and ``Q'`` because each meets ``c`` only at its final vertex.
    """
    want = Parity(want)
    _require_two_edge_connected(g, "thm00")
    _require_off_cycle(g, e, c, "thm00")
    u, v = g.endpoints(e)
    p, q = _attach_to_odd_cycle(g, e, c.cycle, Mode.EDGE, "thm00")
    ui, vj = p.end, q.end
    edge_e = Path((v, u), (e,))
    details = {"attach": [ui, vj], "trim_lengths": [p.length, q.length], "odd_cycle": list(c.cycle.vertices)}
    if ui != vj:
        for arc in c.cycle.arcs(ui, vj):
            walk = close_circuit(edge_e, p, arc, q.reversed())
            if Parity.of(walk.length) is want:
                return ParityWitness(walk, Target.edge(e), want, "thm00", details)
        raise InternalContradiction("both arcs of an odd cycle have the same parity")
    walk = close_circuit(edge_e, p, q.reversed())
    if Parity.of(walk.length) is not want:
        loop = c.cycle.rotated_to(ui).as_circuit()
        loop_path = Path(loop.vertices, loop.edges)
        # splice the whole odd cycle in at the shared attachment vertex
        walk = close_circuit(edge_e, p, loop_path, q.reversed())
        details["spliced"] = True
    return ParityWitness(walk, Target.edge(e), want, "thm00", details)


def _cycle_through_edge_avoiding_it(g: Graph, e: int) -> Cycle:
    u, v = g.endpoints(e)
    back = shortest_path(g, u, v, banned_edges=(e,))
    if back is None:
        raise InternalContradiction(f"edge {e} is a bridge")
    return close_cycle(back, Path((v, u), (e,)))


def _divisibility(g: Graph, k: int, tag: str) -> None:
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if not degrees_divisible_by(g, k):
        raise HypothesisViolation(Violation.DEGREE_NOT_DIVISIBLE, tag, f"k={k}")


def even_cycle_through_edge(g: Graph, e: int, k: int) -> ParityWitness:
    _require_two_connected(g, "thm1")
    _divisibility(g, k, "thm1")
    g.endpoints(e)
    cert = bipartite_or_odd_cycle(g)
    if isinstance(cert, BipartitionCertificate):
        cyc = _cycle_through_edge_avoiding_it(g, e)
        return ParityWitness(cyc, Target.edge(e), Parity.EVEN, "thm1", {"branch": "bipartite"})
    avoid = odd_cycle_avoiding_edge(g, e)
    if avoid is None:
        # G - e bipartite would put both ends of e on one side, making the side
        # degree sums differ by 2 mod k
        raise InternalContradiction("every odd cycle uses e although all degrees are divisible by k >= 3")
    w = cycle_with_parity_through_edge(g, e, avoid, Parity.EVEN)
    return ParityWitness(w.object, w.target, w.parity, "thm1", {"branch": "reroute", **w.details})


def even_cycle_through_edge_regular(g: Graph, e: int) -> ParityWitness:
    """Even cycle through ``e`` in a 2-connected k-regular graph, k >= 3."""
    degs = set(g.degrees())
    if len(degs) != 1 or min(degs, default=0) < 3:
        _require_two_connected(g, "corthm1")
        raise HypothesisViolation(Violation.DEGREE_NOT_DIVISIBLE, "corthm1", "not k-regular with k >= 3")
    (k,) = degs
    w = even_cycle_through_edge(g, e, k)
    return ParityWitness(w.object, w.target, w.parity, "corthm1", w.details)


def even_circuit_through_edge(g: Graph, e: int, k: int) -> ParityWitness:
    _require_two_edge_connected(g, "thm5")
    _divisibility(g, k, "thm5")
    g.endpoints(e)
    cert = bipartite_or_odd_cycle(g)
    if isinstance(cert, BipartitionCertificate):
        cyc = _cycle_through_edge_avoiding_it(g, e)
        return ParityWitness(cyc.as_circuit(), Target.edge(e), Parity.EVEN, "thm5", {"branch": "bipartite"})
    avoid = odd_cycle_avoiding_edge(g, e)
    if avoid is None:
        raise InternalContradiction("every odd cycle uses e although all degrees are divisible by k >= 3")
    w = circuit_with_parity_through_edge(g, e, avoid, Parity.EVEN)
    return ParityWitness(w.object, w.target, w.parity, "thm5", {"branch": "reroute", **w.details})


def _odd_cycle(g: Graph, tag: str) -> OddCycleCertificate:
    cert = bipartite_or_odd_cycle(g)
    if isinstance(cert, BipartitionCertificate):
        raise HypothesisViolation(Violation.BIPARTITE, tag)
    return cert


def odd_cycle_through_edge(g: Graph, e: int) -> ParityWitness:
    _require_two_connected(g, "cor1")
    g.endpoints(e)
    c = _odd_cycle(g, "cor1")
    if e in c.cycle.edges:
        return ParityWitness(c.cycle, Target.edge(e), Parity.ODD, "cor1", {"branch": "on_cycle"})
    w = cycle_with_parity_through_edge(g, e, c, Parity.ODD)
    return ParityWitness(w.object, w.target, w.parity, "cor1", {"branch": "reroute", **w.details})


def odd_circuit_through_edge(g: Graph, e: int) -> ParityWitness:
    _require_two_edge_connected(g, "thm7")
    g.endpoints(e)
    c = _odd_cycle(g, "thm7")
    if e in c.cycle.edges:
        return ParityWitness(c.cycle.as_circuit(), Target.edge(e), Parity.ODD, "thm7", {"branch": "on_cycle"})
    w = circuit_with_parity_through_edge(g, e, c, Parity.ODD)
    return ParityWitness(w.object, w.target, w.parity, "thm7", {"branch": "reroute", **w.details})


def _cycle_through_vertex(g: Graph, v: int) -> Cycle:
    _, e = g.adj[v][0]
    return _cycle_through_edge_avoiding_it(g, e)


def _other_incident_edge(g: Graph, v: int, c: Cycle) -> int:
    on = set(c.edges)
    for _, e in g.adj[v]:
        if e not in on:
            return e
    raise InternalContradiction(f"vertex {v} has no edge off the cycle")


def even_cycle_through_vertex(g: Graph, v: int) -> ParityWitness:
    _require_two_connected(g, "thm2")
    g.check_vertex(v)
    if g.degree(v) < 3:
        raise HypothesisViolation(Violation.DEGREE_TOO_SMALL, "thm2", f"d({v})={g.degree(v)}")
    c = _cycle_through_vertex(g, v)
    if c.length % 2 == 0:
        return ParityWitness(c, Target.vertex(v), Parity.EVEN, "thm2", {"branch": "first_cycle_even"})
    e = _other_incident_edge(g, v, c)
    w = cycle_with_parity_through_edge(g, e, OddCycleCertificate(c), Parity.EVEN)
    return ParityWitness(w.object, Target.vertex(v), Parity.EVEN, "thm2", {"branch": "reroute", "via_edge": e, **w.details})


def even_circuit_through_vertex(g: Graph, v: int) -> ParityWitness:
    _require_two_edge_connected(g, "thm6")
    g.check_vertex(v)
    if g.degree(v) < 3:
        raise HypothesisViolation(Violation.DEGREE_TOO_SMALL, "thm6", f"d({v})={g.degree(v)}")
    c = _cycle_through_vertex(g, v)
    if c.length % 2 == 0:
        return ParityWitness(c.as_circuit(), Target.vertex(v), Parity.EVEN, "thm6", {"branch": "first_cycle_even"})
    e = _other_incident_edge(g, v, c)
    w = circuit_with_parity_through_edge(g, e, OddCycleCertificate(c), Parity.EVEN)
    return ParityWitness(w.object, Target.vertex(v), Parity.EVEN, "thm6", {"branch": "reroute", "via_edge": e, **w.details})


def even_cycle_through_odd_degree_vertex(g: Graph, v: int) -> ParityWitness:
    """Even cycle through a vertex of odd degree in a 2-edge-connected graph.

    Some component of ``G - v`` holds three neighbours x, y, z of ``v``.  With
    M a shortest x-y path and N a shortest z-to-M path meeting M at w (split
    into P = x..w and Q = w..y), the cycles

        C1 = v x M y v,   C2 = v y Q N z v,   C3 = v x P N z v

    satisfy ``l(C3) = l(C1) + l(C2) - 2 (1 + l(Q))``, so one of them is even.
    """
    tag = "thm3"
    _require_two_edge_connected(g, tag)
    g.check_vertex(v)
    if g.degree(v) % 2 == 0:
        raise HypothesisViolation(Violation.DEGREE_EVEN, tag, f"d({v})={g.degree(v)}")

    nbrs = set(g.neighbors(v))
    chosen = None
    for comp in components(g, removed_vertex=v):
        seen = sorted(nbrs.intersection(comp))
        if len(seen) < 2:
            raise InternalContradiction(f"component {comp} of G - v sees fewer than two neighbours of v")
        if len(seen) >= 3 and (chosen is None or seen[0] < chosen[0]):
            chosen = seen
    if chosen is None:
        raise InternalContradiction("every component of G - v sees exactly two neighbours, so d(v) is even")

    trio = chosen[:3]
    dist = {}
    best = None
    for a, b in ((trio[0], trio[1]), (trio[0], trio[2]), (trio[1], trio[2])):
        path = shortest_path(g, a, b, banned_vertices=(v,))
        dist[(a, b)] = path.length
        if best is None or path.length < best[2].length:
            best = (a, b, path)
    x, y, m_path = best
    (z,) = set(trio) - {x, y}

    n_path = shortest_path_to_set(g, z, m_path.vertices, banned_vertices=(v,))
    w = n_path.end
    p_path = m_path.prefix_to(w)
    q_path = m_path.reversed().prefix_to(w).reversed()  # w .. y

    ex, ey, ez = g.edge_id(v, x), g.edge_id(v, y), g.edge_id(v, z)
    c1 = close_cycle(Path((v, x), (ex,)), m_path, Path((y, v), (ey,)))
    c2 = close_cycle(Path((v, y), (ey,)), q_path.reversed(), n_path.reversed(), Path((z, v), (ez,)))
    c3 = close_cycle(Path((v, x), (ex,)), p_path, n_path.reversed(), Path((z, v), (ez,)))

    details = {
        "x": x,
        "y": y,
        "z": z,
        "w": w,
        "lengths": {"C1": c1.length, "C2": c2.length, "C3": c3.length, "vyQ": 1 + q_path.length},
        "identity_branch": False,
    }
    for name, cyc in (("C1", c1), ("C2", c2)):
        if cyc.length % 2 == 0:
            details["chosen"] = name
            return ParityWitness(cyc, Target.vertex(v), Parity.EVEN, tag, details)
    details["identity_branch"] = True
    if c3.length != c1.length + c2.length - 2 * (1 + q_path.length):
        raise InternalContradiction("three-cycle length identity failed")
    if c3.length % 2:
        raise InternalContradiction("C1 and C2 odd but C3 odd too")
    details["chosen"] = "C3"
    return ParityWitness(c3, Target.vertex(v), Parity.EVEN, tag, details)


THEOREMS = ("thm0", "cor1", "thm1", "corthm1", "thm2", "thm3", "thm00", "thm5", "thm6", "thm7")


def _gcd_k(g: Graph) -> int:
    from math import gcd

    k = 0
    for d in g.degrees():
        k = gcd(k, d)
    return k


def divisor_k(g: Graph) -> int | None:
    """Largest k >= 3 dividing every degree, or None (no such k exists)."""
    k = _gcd_k(g)
    return k if k >= 3 else None


def run_theorem(g: Graph, theorem: str, target: Target, parity: Parity | str, k: int | None = None) -> ParityWitness:
    """Dispatch one theorem by tag; the target kind and parity must fit the theorem."""
    parity = Parity(parity)
    needs = {
        "thm0": ("edge", None),
        "cor1": ("edge", Parity.ODD),
        "thm1": ("edge", Parity.EVEN),
        "corthm1": ("edge", Parity.EVEN),
        "thm2": ("vertex", Parity.EVEN),
        "thm3": ("vertex", Parity.EVEN),
        "thm00": ("edge", None),
        "thm5": ("edge", Parity.EVEN),
        "thm6": ("vertex", Parity.EVEN),
        "thm7": ("edge", Parity.ODD),
    }
    if theorem not in needs:
        raise ValueError(f"unknown theorem {theorem!r}")
    kind, par = needs[theorem]
    if target.kind != kind or (par is not None and par is not parity):
        raise ValueError(f"{theorem} produces {par.value if par else 'either parity'} objects through an {kind}")
    e = target.id
    if theorem in ("thm0", "thm00"):
        c = odd_cycle_avoiding_edge(g, e)
        if c is None:
            connected = is_two_connected if theorem == "thm0" else is_two_edge_connected
            if not connected(g):
                which = Violation.NOT_TWO_CONNECTED if theorem == "thm0" else Violation.NOT_TWO_EDGE_CONNECTED
                raise HypothesisViolation(which, theorem)
            raise HypothesisViolation(Violation.NO_ODD_CYCLE_AVOIDING_EDGE, theorem)
        fn = cycle_with_parity_through_edge if theorem == "thm0" else circuit_with_parity_through_edge
        return fn(g, e, c, parity)
    if theorem in ("thm1", "thm5"):
        if k is None:
            k = divisor_k(g)
        if k is None:
            connected = is_two_connected if theorem == "thm1" else is_two_edge_connected
            if not connected(g):
                which = Violation.NOT_TWO_CONNECTED if theorem == "thm1" else Violation.NOT_TWO_EDGE_CONNECTED
                raise HypothesisViolation(which, theorem)
            raise HypothesisViolation(Violation.DEGREE_NOT_DIVISIBLE, theorem, "no k >= 3 divides every degree")
        fn = even_cycle_through_edge if theorem == "thm1" else even_circuit_through_edge
        return fn(g, e, k)
    return {
        "cor1": odd_cycle_through_edge,
        "corthm1": even_cycle_through_edge_regular,
        "thm2": even_cycle_through_vertex,
        "thm3": even_cycle_through_odd_degree_vertex,
        "thm6": even_circuit_through_vertex,
        "thm7": odd_circuit_through_edge,
    }[theorem](g, target.id)


# candidate theorems per (target kind, parity, object), tried in order by ``auto``
AUTO_ORDER = {
    ("edge", Parity.EVEN, "cycle"): ("thm0", "thm1"),
    ("edge", Parity.ODD, "cycle"): ("cor1",),
    ("edge", Parity.EVEN, "circuit"): ("thm00", "thm5"),
    ("edge", Parity.ODD, "circuit"): ("thm7",),
    ("vertex", Parity.EVEN, "cycle"): ("thm2", "thm3"),
    ("vertex", Parity.EVEN, "circuit"): ("thm6",),
}


def find_auto(g: Graph, target: Target, parity: Parity | str, obj: str) -> ParityWitness:
    """Try each applicable theorem in turn; raise the first violation if all fail.

    The raised violation carries ``attempts``: every (theorem, violation) tried.
    """
    parity = Parity(parity)
    key = (target.kind, parity, obj)
    if key not in AUTO_ORDER:
        raise ValueError(f"no theorem yields {parity.value} {obj}s through a {target.kind}")
    attempts = []
    for tag in AUTO_ORDER[key]:
        try:
            return run_theorem(g, tag, target, parity)
        except HypothesisViolation as exc:
            attempts.append(exc)
    first = attempts[0]
    first.attempts = attempts
    raise first
