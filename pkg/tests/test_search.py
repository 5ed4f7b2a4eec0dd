import time

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sbundle.connectivity import induces_s_bundle
from sbundle.generators import c_fat, complete, cycle, empty, hamming, star
from sbundle.graph import Graph, InvalidInputError
from sbundle.oracle import brute_force_max_s_bundle, disconnected_subset_table
from sbundle.search import SolverConfig, bnb, reduce_candidates, solve

from conftest import graphs, random_graph

VARIANTS = {
    "default": {},
    "nopre": {"preprocess": False},
    "greedy": {"lb_mode": "greedy"},
    "nolb": {"lb_mode": "none"},
    "color": {"bound_mode": "color"},
    "noexpand": {"expand_components": False},
    "nopair": {"pair_rule": False},
}


def test_config_validation():
    for bad in ({"s": 0}, {"s": 2, "time_limit": 0}, {"s": 2, "lb_mode": "x"},
                {"s": 2, "bound_mode": "x"}, {"s": 2, "node_limit": -1}):
        with pytest.raises(InvalidInputError):
            SolverConfig(**bad)


def test_solve_examples():
    assert solve(complete(6), SolverConfig(s=2)).best_size == 6
    assert solve(cycle(5), SolverConfig(s=3)).best_size == 5
    assert solve(cycle(5), SolverConfig(s=2)).best_size == 3
    assert solve(empty(0), SolverConfig(s=2)).best_size == 0
    assert solve(empty(4), SolverConfig(s=2)).best_size == 2


def test_bnb_examples():
    assert bnb(complete(7), 3) == 7
    assert bnb(cycle(5), 3) == 5
    assert bnb(cycle(5), 2, lb=4) == 4             # nothing larger exists
    assert bnb(cycle(6), 2, S=[0], C=[1, 2, 3]) == 3


def test_reduce_candidates_examples():
    g = cycle(5)
    # S empty: only the LB-degree rule acts (degree 2 <= 3 - 1)
    pruned, c = reduce_candidates(g, [], range(5), 1, 3)
    assert not pruned and c.size == 0
    pruned, c = reduce_candidates(g, [], range(5), 2, 3)
    assert not pruned and list(c) == [0, 1, 2, 3, 4]
    # S = {0, 2} in C_5, s = 2: both saturated, keep only common neighbours
    pruned, c = reduce_candidates(g, [0, 2], [1, 3, 4], 2, 0)
    assert not pruned and list(c) == [1]
    # |S| = s and no neighbour in S
    pruned, c = reduce_candidates(star(4), [1, 2], [0, 3], 2, 0)
    assert list(c) == [0]
    # an S vertex below the LB degree bound prunes
    pruned, _ = reduce_candidates(star(4), [1], [0, 2, 3], 2, 4)
    assert pruned
    with pytest.raises(InvalidInputError):
        reduce_candidates(g, [0], [0, 1], 2, 0)


def test_pair_rule_drops_far_candidates():
    # two K_4 joined by the bridge 3-4
    g = Graph.from_edges(8, [(a, b) for a in range(4) for b in range(a + 1, 4)]
                         + [(a, b) for a in range(4, 8) for b in range(a + 1, 8)] + [(3, 4)])
    _, plain = reduce_candidates(g, [0], range(1, 8), 2, 4)
    _, paired = reduce_candidates(g, [0], range(1, 8), 2, 4, pair_rule=True)
    assert list(plain) == list(range(1, 8))
    # s = 2, LB = 4: a non-neighbour of 0 needs more than 2 common neighbours
    assert list(paired) == [1, 2, 3]


def test_witness_is_original_ids_and_valid():
    g = c_fat(200, 1)
    r = solve(g, SolverConfig(s=2))
    assert r.best_size == 12 and len(r.witness) == 12 and not r.timed_out
    assert induces_s_bundle(g, r.witness, 2)


def test_timeout_keeps_incumbent():
    g = hamming(6, 4)
    r = solve(g, SolverConfig(s=8, node_limit=50))
    assert r.timed_out and r.tree_nodes == 51
    assert len(r.witness) == r.best_size >= r.lb_size
    assert induces_s_bundle(g, r.witness, 8)
    t = time.perf_counter()
    r = solve(c_fat(200, 1), SolverConfig(s=8, time_limit=0.5, pair_rule=False))
    assert r.timed_out and time.perf_counter() - t < 5


def test_debug_mode_invariants_hold():
    rng = np.random.default_rng(5)
    for _ in range(20):
        g = random_graph(rng, 11, 0.5)
        for s in (1, 2, 3):
            solve(g, SolverConfig(s=s, debug=True, lb_mode="none", preprocess=False))


@given(graphs(max_n=11), st.integers(1, 4))
def test_solve_matches_oracle_for_all_variants(g, s):
    table = disconnected_subset_table(g)
    opt, _ = brute_force_max_s_bundle(g, s, table)
    for name, kw in VARIANTS.items():
        r = solve(g, SolverConfig(s=s, **kw))
        assert r.best_size == opt, name
        assert induces_s_bundle(g, r.witness, s)


@given(graphs(max_n=10))
def test_s1_is_maximum_clique_and_monotone_in_s(g):
    sizes = [solve(g, SolverConfig(s=s)).best_size for s in (1, 2, 3, 4)]
    assert sizes == sorted(sizes)
    adj = [set(map(int, g.neighbors(v))) for v in range(g.n)]
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(b in adj[a] for i, a in enumerate(vs) for b in vs[i + 1:]):
            best = len(vs)
    assert sizes[0] == best
