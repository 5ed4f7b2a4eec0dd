import numpy as np
import pytest
from hypothesis import given

from sbundle.generators import complete, cycle, star
from sbundle.graph import (Graph, InvalidInputError, as_vertex_array, common_neighbors, degree,
                           induced_subgraph)

from conftest import graphs


def check_invariants(g: Graph):
    adj = [set(map(int, g.neighbors(v))) for v in range(g.n)]
    for v in range(g.n):
        nb = g.neighbors(v)
        assert list(nb) == sorted(set(map(int, nb)))  # sorted, no duplicates
        assert v not in adj[v]
        for w in adj[v]:
            assert v in adj[w]
    assert g.m * 2 == sum(len(a) for a in adj)


def test_induced_subgraph_examples():
    h, ids = induced_subgraph(complete(4), [0, 1, 2])
    assert h == complete(3) and list(ids) == [0, 1, 2]
    h, ids = induced_subgraph(cycle(5), {0, 1, 3})
    assert h.n == 3 and h.m == 1 and h.has_edge(0, 1) and h.neighbors(2).size == 0
    assert list(ids) == [0, 1, 3]
    h, ids = induced_subgraph(cycle(5), [])
    assert h.n == 0 and h.m == 0 and ids.size == 0


def test_induced_subgraph_rejects_bad_ids():
    with pytest.raises(InvalidInputError):
        induced_subgraph(cycle(5), [0, 7])
    with pytest.raises(InvalidInputError):
        induced_subgraph(cycle(5), [-1])


def test_degree_examples():
    assert degree(complete(5), 0) == 4
    assert degree(star(4), 0) == 4
    assert degree(star(4), 3) == 1


def test_common_neighbors_examples():
    assert list(common_neighbors(complete(4), 0, 1)) == [2, 3]
    assert list(common_neighbors(cycle(5), 0, 2)) == [1]
    assert common_neighbors(cycle(5), 0, 1).size == 0
    with pytest.raises(InvalidInputError):
        common_neighbors(cycle(5), 2, 2)


def test_from_edges_drops_loops_and_duplicates():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 1), (2, 1)])
    assert g.m == 2
    check_invariants(g)


def test_isolated_vertices_kept():
    g = Graph.from_edges(5, [(0, 1)])
    assert g.n == 5 and degree(g, 4) == 0


def test_graph_is_immutable():
    g = complete(3)
    with pytest.raises(ValueError):
        g.indices[0] = 2


def test_as_vertex_array_sorts_and_dedups():
    assert list(as_vertex_array(complete(5), [3, 1, 3])) == [1, 3]


@given(graphs(max_n=10), graphs(max_n=10))
def test_induced_subgraph_preserves_invariants(g, other):
    verts = [v for v in range(g.n) if v < other.n and other.degrees()[v] % 2 == 0]
    h, ids = induced_subgraph(g, verts)
    check_invariants(h)
    assert list(ids) == sorted(verts)
    for i in range(h.n):
        for j in range(h.n):
            if i != j:
                assert h.has_edge(i, j) == g.has_edge(ids[i], ids[j])


@given(graphs(max_n=10))
def test_degree_sum_and_symmetric_common_neighbours(g):
    assert sum(degree(g, v) for v in range(g.n)) == 2 * g.m
    check_invariants(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert np.array_equal(common_neighbors(g, u, v), common_neighbors(g, v, u))
