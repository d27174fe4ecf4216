import functools

import networkx as nx
import pytest
from hypothesis import settings

from paritycycles.graph import build_graph, complete_graph, cycle_graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def from_nx(h):
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return build_graph(h.number_of_nodes(), sorted((min(mapping[a], mapping[b]), max(mapping[a], mapping[b])) for a, b in h.edges()))


@functools.lru_cache(maxsize=None)
def atlas():
    """All graphs on at most 7 vertices up to isomorphism (networkx atlas)."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g())


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@functools.lru_cache(maxsize=None)
def connected_atlas():
    return tuple(g for g in atlas() if g.n >= 1 and nx.is_connected(to_nx(g)))


def bowtie():
    return build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def book2():
    """K4 minus the edge 2-3; the shared edge 0-1 has id 0."""
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


def c5_with_chord():
    """C5 on 0..4 plus chord 0-2 (arcs of length 2 and 3 between 0 and 2)."""
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)
