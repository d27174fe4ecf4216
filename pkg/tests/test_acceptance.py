"""Acceptance suite: one PASS/FAIL line per criterion.

Hypotheses are decided here from brute-force helpers and the exhaustive
oracle, never from the predicates the constructors use themselves.  Run with
``pytest -m acceptance`` to execute only this module; the summary lines are
printed even without ``-s``.
"""

import time

import pytest

from paritycycles.constructors import (
    circuit_with_parity_through_edge,
    even_circuit_through_edge,
    even_circuit_through_vertex,
    even_cycle_through_edge,
    even_cycle_through_edge_regular,
    even_cycle_through_odd_degree_vertex,
    even_cycle_through_vertex,
    cycle_with_parity_through_edge,
    odd_circuit_through_edge,
    odd_cycle_through_edge,
)
from paritycycles.errors import HypothesisViolation, Violation
from paritycycles.families import Family, FamilySpec, generate
from paritycycles.oracle import (
    EnumerationBudget,
    all_cycles,
    cycle_length_counts,
    enumerate_closed_trails_through,
    exists_parity_circuit,
    exists_parity_cycle,
    validate_witness,
)
from paritycycles.paths import two_edge_disjoint_paths, two_vertex_disjoint_paths
from paritycycles.structure import OddCycleCertificate, is_two_connected, is_two_edge_connected
from paritycycles.witness import Target

from conftest import atlas, connected_atlas
from naive import naive_two_connected, naive_two_edge_connected

pytestmark = pytest.mark.acceptance

# K7 has 21 edges, one more than the default trail budget
BUDGET = EnumerationBudget(16, 24, 21)


@pytest.fixture
def report(capsys):
    def emit(number, ok, summary):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {summary}")

    return emit


class Oracle:
    """Memoised existence queries for one graph."""

    def __init__(self, g):
        self.g = g
        self.memo = {}

    def cycle(self, target, parity):
        key = ("cycle", target, parity)
        if key not in self.memo:
            self.memo[key] = exists_parity_cycle(self.g, target, parity, BUDGET)
        return self.memo[key]

    def circuit(self, target, parity):
        key = ("circuit", target, parity)
        if key not in self.memo:
            self.memo[key] = exists_parity_circuit(self.g, target, parity, BUDGET)
        return self.memo[key]


def _divisors(g):
    degs = g.degrees()
    return [k for k in range(3, max(degs, default=0) + 1) if all(d % k == 0 for d in degs)]


def _cases(g):
    """Every (label, call, target, parity, object) whose hypotheses hold on ``g``."""
    two_conn = naive_two_connected(g)
    two_edge = naive_two_edge_connected(g)
    odd_cycles = [c for c in all_cycles(g, BUDGET) if c.length % 2]
    degs = g.degrees()
    ks = _divisors(g)
    regular = len(set(degs)) == 1 and degs[0] >= 3
    for e in range(g.m):
        t = Target.edge(e)
        avoiding = next((c for c in odd_cycles if e not in c.edges), None)
        if avoiding is not None:
            cert = OddCycleCertificate(avoiding)
            for parity in ("even", "odd"):
                if two_conn:
                    yield "thm0", lambda e=e, p=parity: cycle_with_parity_through_edge(g, e, cert, p), t, parity, "cycle"
                if two_edge:
                    yield "thm00", lambda e=e, p=parity: circuit_with_parity_through_edge(g, e, cert, p), t, parity, "circuit"
        if odd_cycles and two_conn:
            yield "cor1", lambda e=e: odd_cycle_through_edge(g, e), t, "odd", "cycle"
        if odd_cycles and two_edge:
            yield "thm7", lambda e=e: odd_circuit_through_edge(g, e), t, "odd", "circuit"
        for k in ks:
            if two_conn:
                yield "thm1", lambda e=e, k=k: even_cycle_through_edge(g, e, k), t, "even", "cycle"
            if two_edge:
                yield "thm5", lambda e=e, k=k: even_circuit_through_edge(g, e, k), t, "even", "circuit"
        if regular and two_conn:
            yield "corthm1", lambda e=e: even_cycle_through_edge_regular(g, e), t, "even", "cycle"
    for v in range(g.n):
        t = Target.vertex(v)
        if degs[v] >= 3 and two_conn:
            yield "thm2", lambda v=v: even_cycle_through_vertex(g, v), t, "even", "cycle"
        if degs[v] >= 3 and two_edge:
            yield "thm6", lambda v=v: even_circuit_through_vertex(g, v), t, "even", "circuit"
        if degs[v] % 2 and two_edge:
            yield "thm3", lambda v=v: even_cycle_through_odd_degree_vertex(g, v), t, "even", "cycle"


def test_exhaustive_soundness_and_completeness(report):
    start = time.perf_counter()
    graphs = connected_atlas()
    checked, failures = 0, []
    per_theorem = {}
    for g in graphs:
        oracle = Oracle(g)
        for label, call, target, parity, obj in _cases(g):
            checked += 1
            per_theorem[label] = per_theorem.get(label, 0) + 1
            try:
                w = call()
            except (HypothesisViolation, AssertionError) as exc:
                failures.append((g, label, target, parity, repr(exc)))
                continue
            exists = oracle.cycle(target, parity) if obj == "cycle" else oracle.circuit(target, parity)
            v = validate_witness(g, w)
            if not (v and exists and w.target == target and w.parity.value == parity):
                failures.append((g, label, target, parity, v.reason.value, exists))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 600
    counts = " ".join(f"{k}={per_theorem[k]}" for k in sorted(per_theorem))
    report(1, ok, f"{len(graphs)} connected graphs, {checked} cases ({counts}), {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert elapsed <= 600


def test_parity_duality_over_every_odd_cycle(report):
    start = time.perf_counter()
    checked, failures, graphs = 0, [], 0
    for g in connected_atlas():
        if not naive_two_connected(g):
            continue
        odd = [c for c in all_cycles(g, BUDGET) if c.length % 2]
        if not odd:
            continue
        graphs += 1
        for c in odd:
            cert = OddCycleCertificate(c)
            on = set(c.edges)
            for e in range(g.m):
                if e in on:
                    continue
                for parity in ("even", "odd"):
                    checked += 1
                    try:
                        w = cycle_with_parity_through_edge(g, e, cert, parity)
                    except (HypothesisViolation, AssertionError) as exc:
                        failures.append((g, c, e, parity, repr(exc)))
                        continue
                    if not validate_witness(g, w) or w.parity.value != parity:
                        failures.append((g, c, e, parity, validate_witness(g, w).reason.value))
    elapsed = time.perf_counter() - start
    report(2, not failures, f"{graphs} graphs, {checked} (cycle, edge, parity) cases, {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]


def _regular_specs():
    specs = []
    for i in range(200):
        k = (3, 4, 5)[i % 3]
        n = 8 + (i * 7) % 17  # 8..24
        if n * k % 2:
            n += 1 if n < 24 else -1
        specs.append(FamilySpec(Family.RANDOM_K_REGULAR_TWO_CONNECTED, {"n": n, "k": k}, seed=i))
    return specs


def test_regular_graphs_even_cycle_through_every_edge(report):
    start = time.perf_counter()
    edges, failures, oracle_checked = 0, [], 0
    for spec in _regular_specs():
        g = generate(spec).graph
        assert is_two_connected(g) and set(g.degrees()) == {spec.params["k"]}
        in_budget = g.n <= BUDGET.max_vertices and g.m <= BUDGET.max_edges
        for e in range(g.m):
            edges += 1
            w = even_cycle_through_edge_regular(g, e)
            if not validate_witness(g, w):
                failures.append((spec, e, validate_witness(g, w).reason.value))
            if in_budget:
                oracle_checked += 1
                if not exists_parity_cycle(g, Target.edge(e), "even", BUDGET):
                    failures.append((spec, e, "oracle"))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 60
    report(3, ok, f"200 graphs, {edges} edges, {oracle_checked} also oracle-checked, {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert elapsed <= 60


def test_odd_degree_vertex_and_three_cycle_identity(report):
    start = time.perf_counter()
    failures, identity_runs = [], 0
    for i in range(200):
        inst = generate(FamilySpec(Family.RANDOM_TWO_EDGE_CONNECTED_ODD_VERTEX, {"n": 6 + i % 11}, seed=i))
        g, v = inst.graph, inst.target.id
        assert is_two_edge_connected(g) and g.degree(v) % 2 == 1
        w = even_cycle_through_odd_degree_vertex(g, v)
        if not validate_witness(g, w):
            failures.append((i, validate_witness(g, w).reason.value))
        d = w.details
        if d["identity_branch"]:
            identity_runs += 1
            L = d["lengths"]
            if L["C3"] != L["C1"] + L["C2"] - 2 * L["vyQ"] or w.object.length != L["C3"]:
                failures.append((i, "identity", L))
    elapsed = time.perf_counter() - start
    report(4, not failures, f"200 instances, identity branch ran {identity_runs} times, {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]


def _violation(fn, *args):
    try:
        fn(*args)
    except HypothesisViolation as exc:
        return exc.which
    return None


def test_counterexample_families(report):
    start = time.perf_counter()
    wide = EnumerationBudget(64, 128, 21)
    rows = []

    book = generate(FamilySpec(Family.ODD_BOOK, {"p": 2, "page": 3}))
    rows.append((
        "OddBook(2,3)",
        not exists_parity_cycle(book.graph, book.target, "even", wide),
        _violation(even_cycle_through_edge, book.graph, book.target.id, 3) is Violation.DEGREE_NOT_DIVISIBLE,
    ))
    for t in (2, 3, 4):
        fr = generate(FamilySpec(Family.FRIENDSHIP, {"t": t}))
        rows.append((
            f"Friendship({t})",
            not exists_parity_cycle(fr.graph, fr.target, "even", wide),
            _violation(even_cycle_through_odd_degree_vertex, fr.graph, fr.target.id) is Violation.DEGREE_EVEN,
        ))
    for length in (3, 5):
        pe = generate(FamilySpec(Family.PENDANT_ON_ODD_CYCLE, {"length": length}))
        hub = int(pe.names["hub"].split(":")[1])
        rows.append((
            f"Pendant({length}) bridge",
            not exists_parity_cycle(pe.graph, pe.target, "odd", wide),
            _violation(odd_cycle_through_edge, pe.graph, pe.target.id) is Violation.NOT_TWO_CONNECTED,
        ))
        rows.append((
            f"Pendant({length}) hub",
            not exists_parity_cycle(pe.graph, Target.vertex(hub), "even", wide),
            _violation(even_cycle_through_vertex, pe.graph, hub) is Violation.NOT_TWO_CONNECTED,
        ))
    for k in (3, 5):
        rb = generate(FamilySpec(Family.REGULAR_WITH_BRIDGE, {"k": k}))
        rows.append((
            f"RegularWithBridge({k})",
            not exists_parity_cycle(rb.graph, rb.target, "even", wide),
            _violation(even_cycle_through_edge_regular, rb.graph, rb.target.id) is Violation.NOT_TWO_CONNECTED,
        ))
    elapsed = time.perf_counter() - start
    bad = [name for name, absent, violated in rows if not (absent and violated)]
    ok = not bad and elapsed <= 30
    report(5, ok, f"{len(rows)} instances, nonexistence and violation confirmed for {len(rows) - len(bad)}, {elapsed:.1f}s")
    assert not bad, bad
    assert elapsed <= 30


def test_circuit_exists_where_cycle_cannot(report):
    inst = generate(FamilySpec(Family.FRIENDSHIP, {"t": 2}))
    g, center = inst.graph, inst.target
    no_cycle = not exists_parity_cycle(g, center, "even", BUDGET)
    w = even_circuit_through_vertex(g, center.id)
    valid = bool(validate_witness(g, w))
    shortest = min(c.length for c in enumerate_closed_trails_through(g, center, BUDGET) if c.length % 2 == 0)
    ok = no_cycle and valid and w.object.length == 6 and shortest == 6
    report(6, ok, f"even cycles through center: {sum(n for L, n in cycle_length_counts(g, center).items() if L % 2 == 0)}, "
                  f"even closed trail of length {w.object.length} (oracle minimum {shortest}), valid={valid}")
    assert no_cycle and valid
    assert w.object.length == 6 == shortest


def test_menger_consistency(report):
    mismatches, graphs = [], 0
    for g in atlas():
        if g.n < 2:
            continue
        graphs += 1
        pairs = [(s, t) for s in range(g.n) for t in range(s + 1, g.n)]
        vertex_ok = all(two_vertex_disjoint_paths(g, s, t) is not None for s, t in pairs)
        edge_ok = all(two_edge_disjoint_paths(g, s, t) is not None for s, t in pairs)
        if vertex_ok != is_two_connected(g) or is_two_connected(g) != naive_two_connected(g):
            mismatches.append((g, "vertex"))
        if edge_ok != is_two_edge_connected(g) or is_two_edge_connected(g) != naive_two_edge_connected(g):
            mismatches.append((g, "edge"))
    report(7, not mismatches, f"{graphs} graphs on 2..7 vertices, {len(mismatches)} mismatches")
    assert not mismatches, mismatches[:5]
