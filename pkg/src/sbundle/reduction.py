"""Graph reduction against a known lower bound.

Given an s-bundle of size ``lb``, only solutions larger than ``lb`` matter:

* degree rule     - drop ``v`` when ``deg(v) <= lb - s``;
* edge rule       - drop edge ``uv`` when ``|N(u) & N(v)| <= lb - 2s``;
* neighbourhood rule - drop ``v`` when the partition bound of ``G[N(v)]``
  is at most ``lb - s``.

:func:`reduce` runs degree+edge to a fixpoint, the neighbourhood rule once,
then edge+degree to a fixpoint again.
"""
from __future__ import annotations

import numpy as np

from ._accel import njit
from .bounds import PUB, _partition_local
from .connectivity import local_csr_ws
from .graph import Graph, subgraph_from_masks


@njit
def _edge_rule_slots(indptr, indices, threshold):
    """Slot mask after deleting edges with at most ``threshold`` common neighbours.

    Counts are taken on the graph as given (snapshot semantics).
    """
    n = indptr.shape[0] - 1
    keep = np.ones(indices.shape[0], np.uint8)
    if threshold < 0:
        return keep
    for u in range(n):
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if v <= u:
                continue
            a = indptr[u]
            b = indptr[v]
            common = 0
            while a < indptr[u + 1] and b < indptr[v + 1]:
                x = indices[a]
                y = indices[b]
                if x == y:
                    common += 1
                    a += 1
                    b += 1
                elif x < y:
                    a += 1
                else:
                    b += 1
                if common > threshold:
                    break
            if common <= threshold:
                keep[j] = 0
                lo = indptr[v]
                hi = indptr[v + 1]
                while lo < hi:  # twin slot v -> u
                    mid = (lo + hi) // 2
                    if indices[mid] < u:
                        lo = mid + 1
                    else:
                        hi = mid
                keep[lo] = 0
    return keep


@njit
def _neighbourhood_rule(indptr, indices, s, threshold, mode):
    """Alive mask after the neighbourhood-bound rule with immediate deletion."""
    n = indptr.shape[0] - 1
    alive = np.ones(n, np.uint8)
    if threshold < 0:
        return alive
    pos = np.full(n, -1, np.int64)
    buf = np.empty(n, np.int64)
    for v in range(n):
        k = 0
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            if alive[w]:
                buf[k] = w
                k += 1
        lptr, lidx = local_csr_ws(indptr, indices, buf[:k], pos)
        ub, _ = _partition_local(lptr, lidx, s, mode)
        if ub <= threshold:
            alive[v] = 0
    return alive


def _degree_rule(g: Graph, s: int, lb: int) -> tuple[Graph, np.ndarray]:
    keep = (g.degrees() > lb - s).astype(np.uint8)
    return subgraph_from_masks(g, keep, np.ones(len(g.indices), np.uint8))


def _edge_rule(g: Graph, s: int, lb: int) -> tuple[Graph, np.ndarray]:
    slots = _edge_rule_slots(g.indptr, g.indices, lb - 2 * s)
    return subgraph_from_masks(g, np.ones(g.n, np.uint8), slots)


def _nbhd_rule(g: Graph, s: int, lb: int, mode: int = PUB) -> tuple[Graph, np.ndarray]:
    alive = _neighbourhood_rule(g.indptr, g.indices, s, lb - s, mode)
    return subgraph_from_masks(g, alive, np.ones(len(g.indices), np.uint8))


def rule1_pass(g: Graph, s: int, lb: int) -> Graph:
    """One pass of the degree rule (degrees from the input graph)."""
    return _degree_rule(g, s, lb)[0]


def rule2_pass(g: Graph, s: int, lb: int) -> Graph:
    """One pass of the common-neighbour edge rule; vertex ids are unchanged."""
    return _edge_rule(g, s, lb)[0]


def rule3_pass(g: Graph, s: int, lb: int, mode: int = PUB) -> Graph:
    """Neighbourhood-bound rule, ascending ids, deletions visible immediately."""
    return _nbhd_rule(g, s, lb, mode)[0]


def reduce(g: Graph, s: int, lb: int, mode: int = PUB) -> tuple[Graph, np.ndarray]:
    """Reduced graph and ``id_map`` (reduced id -> id in ``g``)."""
    ids = np.arange(g.n, dtype=np.int64)

    def fixpoint(g, ids, first, second):
        while True:
            g1, k1 = first(g, s, lb)
            g2, k2 = second(g1, s, lb)
            if g2.n == g.n and g2.m == g.m:
                return g, ids
            g, ids = g2, ids[k1][k2]

    g, ids = fixpoint(g, ids, _degree_rule, _edge_rule)
    g, keep = _nbhd_rule(g, s, lb, mode)
    ids = ids[keep]
    g, ids = fixpoint(g, ids, _edge_rule, _degree_rule)
    return g, ids
