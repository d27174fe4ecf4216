import pytest
from hypothesis import given

from paritycycles.graph import build_graph, complete_graph, cycle_graph, path_graph, petersen_graph
from paritycycles.graph import delete_edge, delete_vertex
from paritycycles.structure import (
    BipartitionCertificate,
    OddCycleCertificate,
    bipartite_or_odd_cycle,
    connectivity_report,
    degrees_divisible_by,
    is_connected,
    is_two_connected,
    is_two_edge_connected,
    odd_cycle_avoiding_edge,
    side_degree_sums,
)

from conftest import atlas, book2, bowtie, connected_atlas
from naive import naive_cycles, naive_two_connected, naive_two_edge_connected
from test_graph import graphs


def test_c4_bipartition():
    cert = bipartite_or_odd_cycle(cycle_graph(4))
    assert isinstance(cert, BipartitionCertificate)
    assert cert.side == (0, 1, 0, 1)


def test_c5_odd_cycle_is_itself():
    cert = bipartite_or_odd_cycle(cycle_graph(5))
    assert isinstance(cert, OddCycleCertificate)
    assert sorted(cert.cycle.vertices) == [0, 1, 2, 3, 4]


def test_petersen_odd_cycle():
    g = petersen_graph()
    cert = bipartite_or_odd_cycle(g)
    assert isinstance(cert, OddCycleCertificate) and cert.validates(g)
    assert cert.cycle.length == 5


@given(graphs())
def test_certificate_always_validates(g):
    cert = bipartite_or_odd_cycle(g)
    assert cert.validates(g)
    # g is bipartite exactly when brute force finds no odd cycle
    has_odd = any(len(c) % 2 for c in naive_cycles(g)) if g.n <= 7 else None
    if has_odd is not None:
        assert isinstance(cert, OddCycleCertificate) == has_odd


def test_odd_cycle_avoiding_edge_k4():
    g = complete_graph(4)
    for e in range(g.m):
        c = odd_cycle_avoiding_edge(g, e)
        assert c is not None and c.validates(g) and e not in c.cycle.edges


def test_odd_cycle_avoiding_edge_none():
    for e in range(5):
        assert odd_cycle_avoiding_edge(cycle_graph(5), e) is None
    assert odd_cycle_avoiding_edge(book2(), 0) is None


@pytest.mark.parametrize(
    "g, two, two_edge",
    [
        (cycle_graph(3), True, True),
        (bowtie(), False, True),
        (path_graph(3), False, False),
        (build_graph(2, [(0, 1)]), False, False),
        (build_graph(1, []), False, False),
    ],
)
def test_connectivity_examples(g, two, two_edge):
    assert is_two_connected(g) is two
    assert is_two_edge_connected(g) is two_edge


def test_bowtie_report():
    rep = connectivity_report(bowtie())
    assert rep.articulation_vertices == {0}
    assert rep.bridges == frozenset()


def test_connectivity_matches_deletion_on_atlas():
    for g in atlas():
        assert is_two_connected(g) == naive_two_connected(g)
        assert is_two_edge_connected(g) == naive_two_edge_connected(g)


def test_report_lists_exactly_the_critical_elements():
    for g in connected_atlas():
        rep = connectivity_report(g)
        for v in range(g.n):
            if g.n == 1:
                break
            h, _ = delete_vertex(g, v)
            assert (v in rep.articulation_vertices) == (not is_connected(h))
        for e in range(g.m):
            h, _ = delete_edge(g, e)
            assert (e in rep.bridges) == (not is_connected(h))


@pytest.mark.parametrize("g, k, expected", [(complete_graph(4), 3, True), (cycle_graph(4), 3, False), (complete_graph(5), 4, True)])
def test_degrees_divisible(g, k, expected):
    assert degrees_divisible_by(g, k) is expected


def test_side_degree_sums_rule_out_same_side_ends():
    # With every degree divisible by k >= 3, a bipartite G - e would need both
    # ends of e on one side; that side sums to -2 mod k, the other to 0, yet the
    # sums of a bipartite graph are equal.  So the ends always split.
    checked = 0
    for g in connected_atlas():
        ks = [k for k in range(3, 7) if degrees_divisible_by(g, k)]
        if not ks:
            continue
        for e in range(g.m):
            h, _ = delete_edge(g, e)
            cert = bipartite_or_odd_cycle(h)
            if not isinstance(cert, BipartitionCertificate):
                continue
            u, v = g.edges[e]
            for k in ks:
                x, y = side_degree_sums(h, cert, k)
                assert x == y
                if cert.side[u] == cert.side[v]:
                    s = cert.side[u]
                    assert ((x, y)[s], (x, y)[1 - s]) == ((-2) % k, 0)
                checked += 1
            assert cert.side[u] != cert.side[v]
    assert checked > 0
