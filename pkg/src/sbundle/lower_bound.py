"""Initial incumbent: a maximal s-bundle grown from a greedy clique.

The clique is expanded one vertex at a time.  Candidates are ranked either by
a three-step lazy random walk seeded on the current solution (``randwalk``)
or by their number of neighbours in the solution (``greedy``).
"""
from __future__ import annotations

from typing import Callable, Iterable, Optional

import numpy as np

from ._accel import njit
from .connectivity import FEASIBLE, induced_bundle_status
from .graph import Graph, InvalidInputError, as_vertex_array

LB_MODES = ("randwalk", "greedy")


@njit
def _greedy_clique(indptr, indices):
    n = indptr.shape[0] - 1
    cand = np.ones(n, np.uint8)
    deg = np.empty(n, np.int64)
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
    mark = np.zeros(n, np.uint8)
    clique = np.empty(n, np.int64)
    size = 0
    left = n
    while left > 0:
        best = -1
        for v in range(n):
            if cand[v] == 1 and (best < 0 or deg[v] > deg[best]):
                best = v
        clique[size] = best
        size += 1
        for j in range(indptr[best], indptr[best + 1]):
            mark[indices[j]] = 1
        for v in range(n):
            if cand[v] == 1 and (v == best or mark[v] == 0):
                cand[v] = 0
                left -= 1
                for j in range(indptr[v], indptr[v + 1]):
                    deg[indices[j]] -= 1
        for j in range(indptr[best], indptr[best + 1]):
            mark[indices[j]] = 0
    return np.sort(clique[:size])


@njit
def _lazy_walk(indptr, indices, weights, steps):
    n = indptr.shape[0] - 1
    w = weights.copy()
    nxt = np.empty(n, np.float64)
    for _ in range(steps):
        for v in range(n):
            nxt[v] = 0.0
        for v in range(n):
            d = indptr[v + 1] - indptr[v]
            if d == 0:
                nxt[v] += w[v]
                continue
            nxt[v] += 0.5 * w[v]
            share = 0.5 * w[v] / d
            for j in range(indptr[v], indptr[v + 1]):
                nxt[indices[j]] += share
        w, nxt = nxt, w
    return w


@njit
def _neighbors_in(indptr, indices, member):
    n = indptr.shape[0] - 1
    out = np.zeros(n, np.int64)
    for v in range(n):
        for j in range(indptr[v], indptr[v + 1]):
            out[v] += member[indices[j]]
    return out


def greedy_clique(g: Graph) -> np.ndarray:
    """Maximal clique built by repeatedly taking the highest residual-degree vertex."""
    if g.n == 0:
        return np.zeros(0, np.int64)
    return _greedy_clique(g.indptr, g.indices)


def lazy_walk_scores(g: Graph, seed: Iterable[int], steps: int = 3) -> np.ndarray:
    """Weights after ``steps`` rounds of ``w <- (w + A D^-1 w) / 2``.

    Seed vertices start with unit weight; isolated vertices keep their weight.
    """
    start = np.zeros(g.n, np.float64)
    start[as_vertex_array(g, seed)] = 1.0
    return _lazy_walk(g.indptr, g.indices, start, int(steps))


def _default_feasible(s: int) -> Callable[[Graph, np.ndarray], bool]:
    def feasible(g: Graph, verts: np.ndarray) -> bool:
        return induced_bundle_status(g.indptr, g.indices, verts, s)[0] == FEASIBLE
    return feasible


def generate_lb(
    g: Graph,
    s: int,
    mode: str = "randwalk",
    feasible: Optional[Callable[[Graph, np.ndarray], bool]] = None,
    steps: int = 3,
) -> np.ndarray:
    """Grow a maximal s-bundle from :func:`greedy_clique`; returns sorted ids.

    ``feasible(g, sorted_ids)`` may replace the s-bundle test so other
    hereditary clique relaxations can reuse the expansion.  With a custom
    predicate the degree-bound pool filter is skipped, since it is only valid
    for s-bundles.
    """
    if s < 1:
        raise InvalidInputError("s must be a positive integer")
    if mode not in LB_MODES:
        raise InvalidInputError(f"unknown lower-bound mode {mode!r}")
    if g.n == 0:
        return np.zeros(0, np.int64)
    prefilter = feasible is None
    if feasible is None:
        feasible = _default_feasible(s)

    member = np.zeros(g.n, np.int64)
    clique = greedy_clique(g)
    member[clique] = 1
    size = len(clique)
    pool = member == 0
    while True:
        cand = np.flatnonzero(pool)
        if prefilter and len(cand):
            inside = _neighbors_in(g.indptr, g.indices, member)[cand]
            dead = inside <= size - s
            pool[cand[dead]] = False
            cand = cand[~dead]
        if len(cand) == 0:
            break
        if mode == "randwalk":
            score = _lazy_walk(g.indptr, g.indices, member.astype(np.float64), steps)[cand]
        else:
            score = _neighbors_in(g.indptr, g.indices, member)[cand]
        u = int(cand[np.argmax(score)])  # argmax keeps the first, i.e. lowest id
        pool[u] = False
        member[u] = 1
        if feasible(g, np.flatnonzero(member)):
            size += 1
        else:
            member[u] = 0
    return np.flatnonzero(member)
