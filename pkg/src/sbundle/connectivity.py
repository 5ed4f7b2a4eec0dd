"""Vertex connectivity and s-bundle feasibility through unit-capacity max-flow.

Every vertex ``u`` is split into an in-copy ``2u`` and an out-copy ``2u + 1``
joined by a unit arc; each undirected edge ``{u, v}`` becomes the arcs
``out(u) -> in(v)`` and ``out(v) -> in(u)``.  For non-adjacent ``u, v`` the
maximum ``out(u) -> in(v)`` flow is the number of internally vertex-disjoint
paths, i.e. the local connectivity.  Arcs are stored with their residual twin
at index ``e ^ 1``.

Feasibility queries never need exact connectivity, so every flow carries a
cap and stops augmenting once the threshold is reached.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from ._accel import njit
from .graph import Graph, InvalidInputError, as_vertex_array

UNLIMITED = np.iinfo(np.int64).max

FEASIBLE = 0
DEGREE_VIOLATION = 1
DISCONNECTED = 2
PAIR_VIOLATION = 3


# --------------------------------------------------------------------------
# kernels

@njit
def local_csr_ws(indptr, indices, verts, pos):
    """CSR of the subgraph induced by sorted ``verts``, in local ids.

    ``pos`` is a caller-owned workspace of length n filled with -1; it is
    restored before returning.
    """
    k = verts.shape[0]
    for i in range(k):
        pos[verts[i]] = i
    lptr = np.zeros(k + 1, np.int64)
    for i in range(k):
        v = verts[i]
        c = 0
        for j in range(indptr[v], indptr[v + 1]):
            if pos[indices[j]] >= 0:
                c += 1
        lptr[i + 1] = lptr[i] + c
    lidx = np.empty(lptr[k], np.int64)
    for i in range(k):
        v = verts[i]
        p = lptr[i]
        for j in range(indptr[v], indptr[v + 1]):
            w = pos[indices[j]]
            if w >= 0:
                lidx[p] = w
                p += 1
    for i in range(k):
        pos[verts[i]] = -1
    return lptr, lidx


@njit
def _local_csr(indptr, indices, verts):
    pos = np.full(indptr.shape[0] - 1, -1, np.int64)
    return local_csr_ws(indptr, indices, verts, pos)


@njit
def _build_network(indptr, indices):
    n = indptr.shape[0] - 1
    n_arcs = n + indices.shape[0]
    head = np.full(2 * n, -1, np.int64)
    to = np.empty(2 * n_arcs, np.int64)
    nxt = np.empty(2 * n_arcs, np.int64)
    cap = np.zeros(2 * n_arcs, np.int64)
    e = 0
    for u in range(n):
        a = 2 * u
        b = 2 * u + 1
        to[e] = b
        cap[e] = 1
        nxt[e] = head[a]
        head[a] = e
        to[e + 1] = a
        nxt[e + 1] = head[b]
        head[b] = e + 1
        e += 2
    for u in range(n):
        for j in range(indptr[u], indptr[u + 1]):
            a = 2 * u + 1
            b = 2 * indices[j]
            to[e] = b
            cap[e] = 1
            nxt[e] = head[a]
            head[a] = e
            to[e + 1] = a
            nxt[e + 1] = head[b]
            head[b] = e + 1
            e += 2
    return head, to, nxt, cap


@njit
def _dinic(head, to, nxt, cap, src, sink, limit):
    """Dinic max-flow on unit arcs, modifying ``cap`` in place; stops at ``limit``."""
    nn = head.shape[0]
    level = np.empty(nn, np.int64)
    it = np.empty(nn, np.int64)
    queue = np.empty(nn, np.int64)
    stack = np.empty(nn + 1, np.int64)
    path = np.empty(nn + 1, np.int64)
    flow = 0
    while flow < limit:
        for i in range(nn):
            level[i] = -1
        level[src] = 0
        queue[0] = src
        qh = 0
        qt = 1
        while qh < qt:
            x = queue[qh]
            qh += 1
            e = head[x]
            while e != -1:
                y = to[e]
                if cap[e] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    queue[qt] = y
                    qt += 1
                e = nxt[e]
        if level[sink] < 0:
            break
        for i in range(nn):
            it[i] = head[i]
        while flow < limit:
            depth = 0
            stack[0] = src
            found = False
            while depth >= 0:
                x = stack[depth]
                if x == sink:
                    found = True
                    break
                e = it[x]
                while e != -1:
                    if cap[e] > 0 and level[to[e]] == level[x] + 1:
                        break
                    e = nxt[e]
                it[x] = e
                if e == -1:
                    level[x] = -1
                    depth -= 1
                else:
                    path[depth] = e
                    depth += 1
                    stack[depth] = to[e]
            if not found:
                break
            for d in range(depth):
                e = path[d]
                cap[e] -= 1
                cap[e ^ 1] += 1
            flow += 1
    return flow


@njit
def _is_connected(lptr, lidx):
    k = lptr.shape[0] - 1
    if k <= 1:
        return True
    seen = np.zeros(k, np.uint8)
    queue = np.empty(k, np.int64)
    queue[0] = 0
    seen[0] = 1
    qh = 0
    qt = 1
    while qh < qt:
        x = queue[qh]
        qh += 1
        for j in range(lptr[x], lptr[x + 1]):
            y = lidx[j]
            if seen[y] == 0:
                seen[y] = 1
                queue[qt] = y
                qt += 1
    return qt == k


@njit
def _connectivity_at_least(lptr, lidx, k):
    """Return ``(ok, u, v, flow)``; on failure ``(u, v)`` is a witness pair."""
    n = lptr.shape[0] - 1
    if k <= 0:
        return True, -1, -1, 0
    m2 = lptr[n]
    if m2 == n * (n - 1):
        return n - 1 >= k, -1, -1, n - 1
    head, to, nxt, cap0 = _build_network(lptr, lidx)
    cap = cap0.copy()
    adj = np.zeros(n, np.uint8)
    for u in range(n):
        for j in range(lptr[u], lptr[u + 1]):
            adj[lidx[j]] = 1
        for v in range(u + 1, n):
            if adj[v] == 0:
                for i in range(cap.shape[0]):
                    cap[i] = cap0[i]
                f = _dinic(head, to, nxt, cap, 2 * u + 1, 2 * v, k)
                if f < k:
                    return False, u, v, f
        for j in range(lptr[u], lptr[u + 1]):
            adj[lidx[j]] = 0
    return True, -1, -1, 0


@njit
def _bundle_status(lptr, lidx, s):
    """Classify G (local CSR) against the s-bundle condition.

    Returns ``(status, a, b, value)``: ``a`` is the low-degree vertex for a
    degree violation, ``(a, b)`` the pair and ``value`` its capped flow for a
    pair violation.
    """
    n = lptr.shape[0] - 1
    if n <= s:
        return FEASIBLE, -1, -1, 0
    if not _is_connected(lptr, lidx):
        return DISCONNECTED, -1, -1, 0
    need = n - s
    for v in range(n):
        if lptr[v + 1] - lptr[v] < need:
            return DEGREE_VIOLATION, v, -1, lptr[v + 1] - lptr[v]
    ok, a, b, f = _connectivity_at_least(lptr, lidx, need)
    if ok:
        return FEASIBLE, -1, -1, 0
    return PAIR_VIOLATION, a, b, f


@njit
def induced_bundle_status(indptr, indices, verts, s):
    """``_bundle_status`` on the subgraph induced by sorted global ``verts``."""
    lptr, lidx = _local_csr(indptr, indices, verts)
    return _bundle_status(lptr, lidx, s)


# --------------------------------------------------------------------------
# public API

class FlowNetwork:
    """Unit-capacity vertex-split network of a graph.

    ``in_node(u)`` / ``out_node(u)`` give the node ids of the two copies of
    vertex ``u``.  Residual capacities are reset before every query, so one
    network can answer many source/sink pairs.
    """

    def __init__(self, g: Graph):
        self.n_vertices = g.n
        self.head, self.to, self.nxt, self.capacity = _build_network(g.indptr, g.indices)
        self.residual = self.capacity.copy()

    @property
    def num_nodes(self) -> int:
        return len(self.head)

    @property
    def num_arcs(self) -> int:
        return len(self.to) // 2

    @staticmethod
    def in_node(u: int) -> int:
        return 2 * u

    @staticmethod
    def out_node(u: int) -> int:
        return 2 * u + 1

    def arcs(self) -> list[tuple[int, int, int]]:
        """Forward arcs as ``(tail, head, capacity)``."""
        return [(int(self.to[e + 1]), int(self.to[e]), int(self.capacity[e]))
                for e in range(0, len(self.to), 2)]

    def max_flow(self, source: int, sink: int, cap_limit: Optional[int] = None) -> int:
        if source == sink:
            raise InvalidInputError("source and sink must differ")
        if source % 2 != 1 or sink % 2 != 0:
            raise InvalidInputError("source must be an out-copy and sink an in-copy")
        if not (0 <= source < self.num_nodes and 0 <= sink < self.num_nodes):
            raise InvalidInputError("node id out of range")
        limit = UNLIMITED if cap_limit is None else int(cap_limit)
        if limit < 0:
            raise InvalidInputError("cap_limit must be non-negative")
        self.residual[:] = self.capacity
        if limit == 0:
            return 0
        return int(_dinic(self.head, self.to, self.nxt, self.residual, source, sink, limit))


def build_flow_network(g: Graph) -> FlowNetwork:
    return FlowNetwork(g)


def max_flow(net: FlowNetwork, source: int, sink: int, cap_limit: Optional[int] = None) -> int:
    return net.max_flow(source, sink, cap_limit)


def local_connectivity(g: Graph, u: int, v: int, cap_limit: Optional[int] = None) -> int:
    """min(kappa_G(u, v), cap_limit) for distinct non-adjacent ``u``, ``v``."""
    if u == v:
        raise InvalidInputError("local connectivity needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidInputError("vertex id out of range")
    if g.has_edge(u, v):
        raise InvalidInputError(f"vertices {u} and {v} are adjacent")
    net = FlowNetwork(g)
    return net.max_flow(net.out_node(u), net.in_node(v), cap_limit)


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    if k < 0:
        raise InvalidInputError("k must be non-negative")
    ok, _, _, _ = _connectivity_at_least(g.indptr, g.indices, k)
    return bool(ok)


def is_s_bundle(g: Graph, s: int) -> bool:
    if s < 1:
        raise InvalidInputError("s must be a positive integer")
    status, _, _, _ = _bundle_status(g.indptr, g.indices, s)
    return status == FEASIBLE


def induces_s_bundle(g: Graph, verts: Iterable[int], s: int) -> bool:
    """True iff ``G[verts]`` is an s-bundle (no intermediate Graph is built)."""
    if s < 1:
        raise InvalidInputError("s must be a positive integer")
    arr = as_vertex_array(g, verts)
    status, _, _, _ = induced_bundle_status(g.indptr, g.indices, arr, s)
    return status == FEASIBLE


def can_extend(g: Graph, s_set: Iterable[int], u: int, s: int) -> bool:
    arr = as_vertex_array(g, s_set)
    if not 0 <= u < g.n:
        raise InvalidInputError(f"vertex {u} out of range")
    i = np.searchsorted(arr, u)
    if i < len(arr) and arr[i] == u:
        raise InvalidInputError(f"vertex {u} is already in the set")
    return induces_s_bundle(g, np.insert(arr, i, u), s)


@dataclass(frozen=True)
class Certificate:
    """Why a vertex set fails to induce an s-bundle (ids of the input graph).

    For a connected induced subgraph the certificate is always a non-adjacent
    pair whose local connectivity falls short; ``low_degree`` additionally
    names a vertex violating the degree bound when there is one.
    """
    kind: str                 # "pair" | "disconnected"
    vertices: tuple[int, int]
    value: int                # capped pair connectivity (0 when disconnected)
    required: int             # |set| - s
    low_degree: Optional[tuple[int, int]] = None   # (vertex, degree)

    def describe(self, label=lambda v: v) -> str:
        a, b = (label(v) for v in self.vertices)
        if self.kind == "disconnected":
            text = f"induced subgraph is disconnected: {a} and {b} lie in different components"
        else:
            text = f"pair ({a}, {b}) has local connectivity {self.value} < {self.required}"
        if self.low_degree is not None:
            v, d = self.low_degree
            text += f"; vertex {label(v)} has degree {d} < {self.required}"
        return text


def bundle_certificate(g: Graph, verts: Iterable[int], s: int) -> Optional[Certificate]:
    """``None`` when ``G[verts]`` is an s-bundle, otherwise a violation certificate."""
    if s < 1:
        raise InvalidInputError("s must be a positive integer")
    arr = as_vertex_array(g, verts)
    status, a, _, value = induced_bundle_status(g.indptr, g.indices, arr, s)
    if status == FEASIBLE:
        return None
    need = len(arr) - s
    lptr, lidx = _local_csr(g.indptr, g.indices, arr)
    low = (int(arr[a]), int(value)) if status == DEGREE_VIOLATION else None
    if status == DISCONNECTED:
        seen = {0}
        todo = [0]
        while todo:
            x = todo.pop()
            for y in lidx[lptr[x]:lptr[x + 1]]:
                if int(y) not in seen:
                    seen.add(int(y))
                    todo.append(int(y))
        other = next(i for i in range(len(arr)) if i not in seen)
        return Certificate("disconnected", (int(arr[0]), int(arr[other])), 0, need)
    _, u, v, f = _connectivity_at_least(lptr, lidx, need)
    return Certificate("pair", (int(arr[u]), int(arr[v])), int(f), need, low)
