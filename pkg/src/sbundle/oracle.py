"""Brute-force references for testing; exponential, guarded by size limits.

Nothing here touches the flow code.  Connectivity is decided by enumerating
vertex separators over bitmasks.  The maximum s-bundle oracle uses a table
over all vertex subsets: deleting ``X`` from ``G[S]`` leaves a disconnected
graph exactly when ``S - X`` induces a disconnected subgraph, so ``G[S]`` is
an s-bundle iff every disconnected induced subgraph inside ``S`` has at most
``s`` vertices.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from .graph import Graph, InvalidInputError

MAX_BUNDLE_N = 20
MAX_CONNECTIVITY_N = 16


def _bitmask_adjacency(g: Graph) -> list[int]:
    return [sum(1 << int(w) for w in g.neighbors(v)) for v in range(g.n)]


def _connected(adj: list[int], mask: int) -> bool:
    """Is the subgraph induced by ``mask`` connected?  (0/1 vertices count as connected.)"""
    if mask & (mask - 1) == 0:
        return True
    reach = mask & -mask
    frontier = reach
    while frontier:
        grow = 0
        while frontier:
            low = frontier & -frontier
            grow |= adj[low.bit_length() - 1]
            frontier ^= low
        grow &= mask & ~reach
        reach |= grow
        frontier = grow
    return reach == mask


def brute_force_vertex_connectivity(g: Graph) -> int:
    """Smallest ``|X|`` such that ``G - X`` is disconnected or has at most one vertex."""
    if g.n > MAX_CONNECTIVITY_N:
        raise InvalidInputError(f"oracle refuses graphs with more than {MAX_CONNECTIVITY_N} vertices")
    n = g.n
    if n <= 1:
        return 0
    adj = _bitmask_adjacency(g)
    full = (1 << n) - 1
    for size in range(n):
        for sep in combinations(range(n), size):
            rest = full
            for v in sep:
                rest &= ~(1 << v)
            if n - size <= 1 or not _connected(adj, rest):
                return size
    return n - 1


def brute_force_local_connectivity(g: Graph, u: int, v: int) -> int:
    """Smallest separator between non-adjacent ``u`` and ``v`` (excluding both)."""
    if g.n > MAX_CONNECTIVITY_N:
        raise InvalidInputError(f"oracle refuses graphs with more than {MAX_CONNECTIVITY_N} vertices")
    if u == v or g.has_edge(u, v):
        raise InvalidInputError("pair must be distinct and non-adjacent")
    adj = _bitmask_adjacency(g)
    others = [w for w in range(g.n) if w not in (u, v)]
    full = (1 << g.n) - 1
    for size in range(len(others) + 1):
        for sep in combinations(others, size):
            rest = full
            for w in sep:
                rest &= ~(1 << w)
            if not (_component_of(adj, rest, u) >> v) & 1:
                return size
    raise AssertionError("unreachable: removing all other vertices separates u and v")


def _component_of(adj: list[int], mask: int, v: int) -> int:
    reach = 1 << v
    frontier = reach
    while frontier:
        grow = 0
        while frontier:
            low = frontier & -frontier
            grow |= adj[low.bit_length() - 1]
            frontier ^= low
        grow &= mask & ~reach
        reach |= grow
        frontier = grow
    return reach


def disconnected_subset_table(g: Graph) -> np.ndarray:
    """``table[mask]`` = size of the largest disconnected induced subgraph inside ``mask`` (0 if none)."""
    if g.n > MAX_BUNDLE_N:
        raise InvalidInputError(f"oracle refuses graphs with more than {MAX_BUNDLE_N} vertices")
    n = g.n
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    adj = np.array(_bitmask_adjacency(g), dtype=np.int64)
    pop = np.zeros(size, dtype=np.int64)
    for v in range(n):
        pop += (masks >> v) & 1
    # flood fill from the lowest vertex of every mask simultaneously
    reach = masks & -masks
    for _ in range(n):
        grow = np.zeros(size, dtype=np.int64)
        for v in range(n):
            grow |= np.where((reach >> v) & 1, adj[v], 0)
        reach = reach | (grow & masks)
    disconnected = (reach != masks) & (pop >= 2)
    table = np.zeros(size, dtype=np.int64)
    for k in range(2, n + 1):
        layer = masks[pop == k]
        best = np.where(disconnected[layer], k, 0)
        for v in range(n):
            has = (layer >> v) & 1 == 1
            sub = table[layer[has] ^ (1 << v)]
            best[has] = np.maximum(best[has], sub)
        table[layer] = best
    return table


def is_s_bundle_oracle(g: Graph, verts, s: int, table: np.ndarray | None = None) -> bool:
    if table is None:
        table = disconnected_subset_table(g)
    mask = 0
    for v in verts:
        mask |= 1 << int(v)
    return int(table[mask]) <= s


def brute_force_max_s_bundle(g: Graph, s: int, table: np.ndarray | None = None) -> tuple[int, tuple[int, ...]]:
    """Largest s-bundle by exhaustive enumeration; returns ``(size, witness)``.

    Subsets are scanned by decreasing size; the first feasible one (smallest
    bitmask among those of maximum size) is returned.
    """
    if s < 1:
        raise InvalidInputError("s must be a positive integer")
    if g.n > MAX_BUNDLE_N:
        raise InvalidInputError(f"oracle refuses graphs with more than {MAX_BUNDLE_N} vertices")
    if g.n == 0:
        return 0, ()
    if table is None:
        table = disconnected_subset_table(g)
    masks = np.arange(1 << g.n, dtype=np.int64)
    pop = np.zeros(len(masks), dtype=np.int64)
    for v in range(g.n):
        pop += (masks >> v) & 1
    ok = table <= s
    best = int(pop[ok].max())
    mask = int(masks[ok & (pop == best)][0])
    return best, tuple(v for v in range(g.n) if (mask >> v) & 1)
