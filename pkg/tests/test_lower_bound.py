import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sbundle.connectivity import can_extend, induces_s_bundle, is_s_bundle
from sbundle.generators import complete, cycle, empty, path, star
from sbundle.graph import Graph, InvalidInputError
from sbundle.lower_bound import generate_lb, greedy_clique, lazy_walk_scores
from sbundle.oracle import is_s_bundle_oracle

from conftest import graphs


def test_greedy_clique_examples():
    assert list(greedy_clique(complete(6))) == list(range(6))
    assert list(greedy_clique(star(4))) == [0, 1]
    assert len(greedy_clique(empty(3))) == 1
    assert len(greedy_clique(empty(0))) == 0


def test_walk_examples():
    w = lazy_walk_scores(empty(3), [1], 3)
    assert np.allclose(w, [0, 1, 0])
    w = lazy_walk_scores(Graph.from_edges(2, [(0, 1)]), [0], 1)
    assert np.allclose(w, [0.5, 0.5])


def test_walk_matches_transition_matrix():
    g = path(5)
    a = np.zeros((5, 5))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    p = 0.5 * (np.eye(5) + a / a.sum(axis=1, keepdims=True))
    w0 = np.array([1.0, 0, 0, 1, 0])
    assert np.allclose(lazy_walk_scores(g, [0, 3], 3), w0 @ np.linalg.matrix_power(p, 3))


@given(graphs(min_n=1, max_n=12), st.integers(0, 6), st.data())
def test_walk_conserves_weight(g, steps, data):
    seed = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, unique=True))
    w = lazy_walk_scores(g, seed, steps)
    assert (w >= 0).all()
    assert abs(w.sum() - len(seed)) <= 1e-9 * len(seed)


def test_generate_lb_examples():
    assert len(generate_lb(complete(6), 2)) == 6
    assert len(generate_lb(cycle(5), 3)) == 5
    with pytest.raises(InvalidInputError):
        generate_lb(cycle(5), 0)
    with pytest.raises(InvalidInputError):
        generate_lb(cycle(5), 2, mode="bogus")


def test_custom_feasibility_predicate():
    # plain cliques through the exported hook
    def clique(g, verts):
        return all(g.has_edge(a, b) for i, a in enumerate(verts) for b in verts[i + 1:])
    out = generate_lb(cycle(6), 3, feasible=clique)
    assert len(out) == 2


@given(graphs(max_n=12), st.integers(1, 4), st.sampled_from(["randwalk", "greedy"]))
def test_generate_lb_feasible_and_maximal(g, s, mode):
    p = generate_lb(g, s, mode)
    assert is_s_bundle_oracle(g, p, s)
    assert len(p) >= len(greedy_clique(g))
    inside = set(map(int, p))
    for v in range(g.n):
        if v not in inside:
            assert not can_extend(g, p, v, s)
    if is_s_bundle(g, s):
        assert len(p) == g.n
