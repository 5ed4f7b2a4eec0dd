"""Upper bounds on the maximum s-bundle from vertex partitions.

An s-component (every connected component has at most ``s`` vertices) can
contribute at most ``min(|part|, s)`` vertices to any s-bundle, so any
partition into s-components yields the bound ``sum(min(|V_i|, s))``.

Three ways of building the parts are offered, selected by ``mode``:

* ``PUB``      - maximal independent set, then grown into an s-component;
* ``COLOR``    - maximal independent sets only (the classic colour bound);
* ``NOEXPAND`` - s-components grown from empty by one sequential scan.

Selection and scan order are ascending vertex id, so results are
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ._accel import njit
from .connectivity import _local_csr
from .graph import Graph, InvalidInputError, as_vertex_array

PUB = 0
COLOR = 1
NOEXPAND = 2

BOUND_MODES = {"pub": PUB, "color": COLOR, "noexpand": NOEXPAND}


@njit
def dsu_find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@njit
def dsu_union(parent, size, a, b):
    ra = dsu_find(parent, a)
    rb = dsu_find(parent, b)
    if ra == rb:
        return ra
    if size[ra] < size[rb]:
        ra, rb = rb, ra
    parent[rb] = ra
    size[ra] += size[rb]
    return ra


@njit
def _partition_local(lptr, lidx, s, mode):
    """Greedy s-component partition of a local CSR graph.

    Returns ``(ub, label)`` where ``label[v]`` is the index of the part
    holding ``v``.
    """
    k = lptr.shape[0] - 1
    label = np.full(k, -1, np.int64)
    parent = np.arange(k)
    size = np.ones(k, np.int64)
    blocked = np.zeros(k, np.int64)
    stamp = np.zeros(k, np.int64)
    tick = 0
    ub = 0
    remaining = k
    rnd = 0
    while remaining > 0:
        cnt = 0
        if mode != NOEXPAND:
            for u in range(k):
                if label[u] == -1 and blocked[u] != rnd + 1:
                    label[u] = rnd
                    cnt += 1
                    for j in range(lptr[u], lptr[u + 1]):
                        blocked[lidx[j]] = rnd + 1
        if mode != COLOR:
            for u in range(k):
                if label[u] != -1:
                    continue
                tick += 1
                total = 1
                for j in range(lptr[u], lptr[u + 1]):
                    w = lidx[j]
                    if label[w] == rnd:
                        r = dsu_find(parent, w)
                        if stamp[r] != tick:
                            stamp[r] = tick
                            total += size[r]
                            if total > s:
                                break
                if total <= s:
                    label[u] = rnd
                    cnt += 1
                    for j in range(lptr[u], lptr[u + 1]):
                        w = lidx[j]
                        if label[w] == rnd:
                            dsu_union(parent, size, u, w)
        ub += min(cnt, s)
        remaining -= cnt
        rnd += 1
    return ub, label


@njit
def bound_of_set(indptr, indices, verts, s, mode):
    """Bound value for ``G[verts]`` (``verts`` sorted global ids)."""
    lptr, lidx = _local_csr(indptr, indices, verts)
    ub, _ = _partition_local(lptr, lidx, s, mode)
    return ub


class DisjointSetUnion:
    """Union-find with union by size and path compression."""

    def __init__(self, n: int):
        self.parent = np.arange(n, dtype=np.int64)
        self.size = np.ones(n, dtype=np.int64)

    def find(self, x: int) -> int:
        return int(dsu_find(self.parent, x))

    def union(self, a: int, b: int) -> int:
        return int(dsu_union(self.parent, self.size, a, b))

    def comp_size(self, x: int) -> int:
        return int(self.size[self.find(x)])


def dsu_can_add(dsu: DisjointSetUnion, neighbors_in_set: Iterable[int], s: int) -> bool:
    """Would a vertex adjacent to ``neighbors_in_set`` keep the set an s-component?

    Components are counted once however many neighbours they contain.
    """
    roots = {dsu.find(w) for w in neighbors_in_set}
    return 1 + sum(int(dsu.size[r]) for r in roots) <= s


@dataclass
class Partition:
    sets: list[np.ndarray] = field(default_factory=list)
    s: int = 1

    @property
    def contributions(self) -> list[int]:
        return [min(len(p), self.s) for p in self.sets]

    @property
    def bound(self) -> int:
        return sum(self.contributions)

    def __len__(self) -> int:
        return len(self.sets)


def _check_s(s: int) -> None:
    if s < 1:
        raise InvalidInputError("s must be a positive integer")


def partition_sets(g: Graph, verts: Iterable[int], s: int, mode: int = PUB) -> tuple[int, Partition]:
    _check_s(s)
    arr = as_vertex_array(g, verts)
    lptr, lidx = _local_csr(g.indptr, g.indices, arr)
    ub, label = _partition_local(lptr, lidx, s, mode)
    n_parts = int(label.max()) + 1 if len(label) else 0
    sets = [arr[label == i] for i in range(n_parts)]
    return int(ub), Partition(sets, s)


def partition_bound(g: Graph, verts: Iterable[int], s: int) -> tuple[int, Partition]:
    """Partition-based upper bound of ``G[verts]`` together with its partition."""
    return partition_sets(g, verts, s, PUB)


def color_bound(g: Graph, verts: Iterable[int], s: int) -> int:
    return partition_sets(g, verts, s, COLOR)[0]


def noexpand_bound(g: Graph, verts: Iterable[int], s: int) -> int:
    return partition_sets(g, verts, s, NOEXPAND)[0]
