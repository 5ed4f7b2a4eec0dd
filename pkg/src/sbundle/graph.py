"""Immutable undirected simple graphs in CSR form.

Vertex sets are passed around as any iterable of vertex ids and normalised to
sorted ``int64`` arrays (ascending iteration, O(1) membership through a mask
when a kernel needs it).
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from ._accel import njit


class InvalidInputError(ValueError):
    """Raised when an operation receives arguments outside its contract."""


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Adjacency is stored as CSR (``indptr``, ``indices``) with every neighbour
    list sorted ascending.  Instances are immutable; the arrays are marked
    read-only so they can be shared between solver instances.

    ``labels`` optionally maps each vertex to the id it had in its source
    file, so witnesses can be reported in original ids.
    """

    __slots__ = ("n", "m", "indptr", "indices", "labels")

    def __init__(self, indptr, indices, labels: Optional[Sequence[int]] = None):
        indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        indices = np.ascontiguousarray(indices, dtype=np.int64)
        indptr.setflags(write=False)
        indices.setflags(write=False)
        self.n = len(indptr) - 1
        self.indptr = indptr
        self.indices = indices
        self.m = len(indices) // 2
        if labels is not None:
            labels = tuple(int(x) for x in labels)
            if len(labels) != self.n:
                raise InvalidInputError("labels must have one entry per vertex")
        self.labels = labels

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        """Build a graph, silently dropping self-loops and duplicate edges."""
        if n < 0:
            raise InvalidInputError("vertex count must be non-negative")
        arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise InvalidInputError("edge endpoint out of range")
        arr = arr[arr[:, 0] != arr[:, 1]]
        both = np.concatenate([arr, arr[:, ::-1]])
        if both.size:
            both = np.unique(both, axis=0)  # sorts by (u, v) and dedups
        counts = np.bincount(both[:, 0], minlength=n) if both.size else np.zeros(n, np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        indices = both[:, 1].copy() if both.size else np.zeros(0, np.int64)
        return cls(indptr, indices, labels)

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, v) for u, nbrs in enumerate(adjacency) for v in nbrs]
        return cls.from_edges(len(adjacency), edges)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @property
    def adjacency(self) -> list[np.ndarray]:
        return [self.neighbors(v) for v in range(self.n)]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = np.searchsorted(nbrs, v)
        return bool(i < len(nbrs) and nbrs[i] == v)

    def edges(self) -> np.ndarray:
        """Edge array of shape (m, 2) with ``u < v``, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        keep = src < self.indices
        return np.stack([src[keep], self.indices[keep]], axis=1)

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self):
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def as_vertex_array(g: Graph, verts: Iterable[int]) -> np.ndarray:
    """Normalise ``verts`` to a sorted, duplicate-free id array of ``g``."""
    if isinstance(verts, np.ndarray):
        arr = verts.astype(np.int64, copy=False).ravel()
    else:
        arr = np.fromiter((int(v) for v in verts), dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= g.n):
        raise InvalidInputError(f"vertex id out of range for graph with {g.n} vertices")
    return np.unique(arr)


def vertex_mask(g: Graph, verts: Iterable[int]) -> np.ndarray:
    mask = np.zeros(g.n, dtype=np.uint8)
    mask[as_vertex_array(g, verts)] = 1
    return mask


@njit
def compact_csr(indptr, indices, keep_vertex, keep_slot):
    """Drop vertices with ``keep_vertex == 0`` and CSR slots with ``keep_slot == 0``.

    Returns the new ``(indptr, indices)`` and the surviving old ids.
    """
    n = indptr.shape[0] - 1
    pos = np.full(n, -1, np.int64)
    k = 0
    for v in range(n):
        if keep_vertex[v]:
            pos[v] = k
            k += 1
    ids = np.empty(k, np.int64)
    new_ptr = np.zeros(k + 1, np.int64)
    for v in range(n):
        if keep_vertex[v]:
            c = 0
            for j in range(indptr[v], indptr[v + 1]):
                if keep_slot[j] and pos[indices[j]] >= 0:
                    c += 1
            ids[pos[v]] = v
            new_ptr[pos[v] + 1] = c
    for i in range(k):
        new_ptr[i + 1] += new_ptr[i]
    new_idx = np.empty(new_ptr[k], np.int64)
    p = 0
    for v in range(n):
        if keep_vertex[v]:
            for j in range(indptr[v], indptr[v + 1]):
                if keep_slot[j] and pos[indices[j]] >= 0:
                    new_idx[p] = pos[indices[j]]
                    p += 1
    return new_ptr, new_idx, ids


def induced_subgraph(g: Graph, verts: Iterable[int]) -> tuple[Graph, np.ndarray]:
    """Return ``(G[verts], id_map)`` where ``id_map[new] = old``."""
    keep = np.zeros(g.n, np.uint8)
    keep[as_vertex_array(g, verts)] = 1
    return subgraph_from_masks(g, keep, np.ones(len(g.indices), np.uint8))


def subgraph_from_masks(g: Graph, keep_vertex: np.ndarray, keep_slot: np.ndarray) -> tuple[Graph, np.ndarray]:
    indptr, indices, ids = compact_csr(g.indptr, g.indices, keep_vertex, keep_slot)
    labels = None if g.labels is None else [g.labels[v] for v in ids]
    return Graph(indptr, indices, labels), ids


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise InvalidInputError(f"vertex {v} out of range")
    return int(g.indptr[v + 1] - g.indptr[v])


def common_neighbors(g: Graph, u: int, v: int) -> np.ndarray:
    """Sorted common neighbourhood of two distinct vertices."""
    if u == v:
        raise InvalidInputError("common_neighbors needs two distinct vertices")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise InvalidInputError(f"vertex {x} out of range")
    return np.intersect1d(g.neighbors(u), g.neighbors(v), assume_unique=True)
