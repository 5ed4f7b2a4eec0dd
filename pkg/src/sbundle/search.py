"""Exact maximum s-bundle search.

``solve`` chains the pieces: an initial maximal s-bundle, graph reduction
against its size, and a depth-first branch-and-bound over (S, C) pairs where
``S`` is the current partial s-bundle and ``C`` the candidates.  Each node
filters ``C`` with degree arguments, prunes on a partition bound of
``G[S | C]`` and branches on the minimum-degree vertex ``u_p``; when ``u_p``
has too many non-neighbours the branching is t+1-way over those
non-neighbours, exploiting that ``u_p`` tolerates at most ``s - 1`` of them.
"""
from __future__ import annotations

import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from ._accel import njit
from .bounds import BOUND_MODES, COLOR, NOEXPAND, PUB, bound_of_set
from .connectivity import FEASIBLE, induced_bundle_status
from .graph import Graph, InvalidInputError, as_vertex_array
from .lower_bound import generate_lb
from .reduction import reduce

log = logging.getLogger(__name__)

LB_CHOICES = ("randwalk", "greedy", "none")


@dataclass(frozen=True)
class SolverConfig:
    s: int
    time_limit: float = 3600.0
    lb_mode: str = "randwalk"
    bound_mode: str = "pub"
    preprocess: bool = True
    expand_components: bool = True
    node_limit: Optional[int] = None
    debug: bool = False
    pair_rule: bool = True

    def __post_init__(self):
        if not isinstance(self.s, (int, np.integer)) or self.s < 1:
            raise InvalidInputError("s must be a positive integer")
        if not self.time_limit > 0:
            raise InvalidInputError("time_limit must be positive")
        if self.lb_mode not in LB_CHOICES:
            raise InvalidInputError(f"lb_mode must be one of {LB_CHOICES}")
        if self.bound_mode not in ("pub", "color"):
            raise InvalidInputError("bound_mode must be 'pub' or 'color'")
        if self.node_limit is not None and self.node_limit < 0:
            raise InvalidInputError("node_limit must be non-negative")

    @property
    def bound_kernel_mode(self) -> int:
        if self.bound_mode == "color":
            return COLOR
        return PUB if self.expand_components else NOEXPAND


@dataclass
class SolverResult:
    best_size: int
    witness: tuple[int, ...]
    tree_nodes: int
    reduced_v: int
    reduced_e: int
    elapsed: float
    timed_out: bool
    lb_size: int = 0
    stats: dict = field(default_factory=dict)


class _Abort(Exception):
    pass


@njit
def _reduce_candidates(indptr, indices, in_s, in_c, lb, s):
    """Filter ``in_c`` in place; returns ``(pruned, deg_sc, deg_s)``.

    ``deg_sc`` / ``deg_s`` hold degrees inside G[S | C] (after filtering) and
    inside G[S], valid for members of S | C only.
    """
    n = indptr.shape[0] - 1
    deg_sc = np.zeros(n, np.int64)
    deg_s = np.zeros(n, np.int64)
    s_size = 0
    for v in range(n):
        if in_s[v]:
            s_size += 1
        if in_s[v] or in_c[v]:
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if in_s[w]:
                    deg_s[v] += 1
                    deg_sc[v] += 1
                elif in_c[w]:
                    deg_sc[v] += 1
    thr_lb = lb - s
    thr_s = s_size - s
    queue = np.empty(n, np.int64)
    qt = 0
    # deg_s is fixed while S is fixed, so the S-based rules need one pass
    if thr_s >= 0:
        mark = np.zeros(n, np.uint8)
        for v in range(n):
            if in_s[v] and deg_s[v] == thr_s:
                for j in range(indptr[v], indptr[v + 1]):
                    mark[indices[j]] = 1
                for u in range(n):
                    if in_c[u] and mark[u] == 0:
                        in_c[u] = 0
                        queue[qt] = u
                        qt += 1
                for j in range(indptr[v], indptr[v + 1]):
                    mark[indices[j]] = 0
    for u in range(n):
        if in_c[u] and (deg_s[u] <= thr_s or deg_sc[u] <= thr_lb):
            in_c[u] = 0
            queue[qt] = u
            qt += 1
    qh = 0
    while qh < qt:
        u = queue[qh]
        qh += 1
        for j in range(indptr[u], indptr[u + 1]):
            w = indices[j]
            deg_sc[w] -= 1
            if in_c[w] and deg_sc[w] <= thr_lb:
                in_c[w] = 0
                queue[qt] = w
                qt += 1
    pruned = False
    for v in range(n):
        if in_s[v] and deg_sc[v] <= thr_lb:
            pruned = True
            break
    return pruned, deg_sc, deg_s


@njit
def _pair_rule(indptr, indices, in_s, in_c, lb, s):
    """Common-neighbour rule between S and S | C; returns ``(pruned, removed)``.

    Inside an s-bundle every vertex misses at most ``s - 1`` others, so a pair
    ``a, u`` of a solution larger than ``lb`` needs more than ``lb - 2s + 2``
    common neighbours in S | C when non-adjacent, more than ``lb - 2s`` when
    adjacent.  ``a`` ranges over S; offending ``u`` in C are dropped, offending
    ``u`` in S prune the node.
    """
    n = indptr.shape[0] - 1
    nb = np.zeros(n, np.uint8)
    removed = 0
    for a in range(n):
        if not in_s[a]:
            continue
        for j in range(indptr[a], indptr[a + 1]):
            nb[indices[j]] = 1
        for u in range(n):
            if u == a or not (in_s[u] or in_c[u]):
                continue
            limit = lb - 2 * s + (0 if nb[u] else 2)
            if limit < 0:
                continue
            common = 0
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if nb[w] and (in_s[w] or in_c[w]):
                    common += 1
                    if common > limit:
                        break
            if common <= limit:
                if in_s[u]:
                    for j in range(indptr[a], indptr[a + 1]):
                        nb[indices[j]] = 0
                    return True, removed
                in_c[u] = 0
                removed += 1
        for j in range(indptr[a], indptr[a + 1]):
            nb[indices[j]] = 0
    return False, removed


def _filter(g: Graph, in_s, in_c, lb: int, s: int, pair_rule: bool):
    while True:
        pruned, deg, deg_s = _reduce_candidates(g.indptr, g.indices, in_s, in_c, lb, s)
        if pruned or not pair_rule:
            return pruned, deg, deg_s
        pruned, removed = _pair_rule(g.indptr, g.indices, in_s, in_c, lb, s)
        if pruned:
            return True, deg, deg_s
        if removed == 0:
            return False, deg, deg_s


def reduce_candidates(g: Graph, S: Iterable[int], C: Iterable[int], s: int, lb: int,
                      pair_rule: bool = False) -> tuple[bool, np.ndarray]:
    """Apply the candidate-filtering rules; returns ``(pruned, surviving C)``.

    Only the degree rules run unless ``pair_rule`` is set.
    """
    in_s = np.zeros(g.n, np.uint8)
    in_c = np.zeros(g.n, np.uint8)
    in_s[as_vertex_array(g, S)] = 1
    in_c[as_vertex_array(g, C)] = 1
    if np.any(in_s & in_c):
        raise InvalidInputError("S and C must be disjoint")
    pruned, _, _ = _filter(g, in_s, in_c, lb, s, pair_rule)
    return bool(pruned), np.flatnonzero(in_c)


class BranchAndBound:
    """Depth-first search state shared across one solve call."""

    def __init__(self, g: Graph, s: int, lb: int, *, mode: int = PUB,
                 deadline: float = float("inf"), node_limit: Optional[int] = None,
                 debug: bool = False, pair_rule: bool = True):
        self.g = g
        self.s = s
        self.lb = lb
        self.best: Optional[np.ndarray] = None  # set once the search beats lb
        self.improved = False
        self.mode = mode
        self.deadline = deadline
        self.node_limit = node_limit
        self.debug = debug
        self.pair_rule = pair_rule
        self.nodes = 0

    def _feasible(self, mask: np.ndarray) -> bool:
        return induced_bundle_status(self.g.indptr, self.g.indices, np.flatnonzero(mask), self.s)[0] == FEASIBLE

    def _record(self, verts: np.ndarray) -> None:
        if len(verts) > self.lb:
            self.lb = len(verts)
            self.best = verts.copy()
            self.improved = True
            log.debug("incumbent %d after %d nodes", self.lb, self.nodes)

    def run(self, S=None, C=None) -> int:
        n = self.g.n
        in_s = np.zeros(n, np.uint8)
        in_c = np.ones(n, np.uint8)
        if S is not None:
            in_s[:] = 0
            in_s[as_vertex_array(self.g, S)] = 1
        if C is not None:
            in_c[:] = 0
            in_c[as_vertex_array(self.g, C)] = 1
        in_c &= 1 - in_s
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, 4 * n + 1000))
        try:
            self._node(in_s, in_c)
        finally:
            sys.setrecursionlimit(old)
        return self.lb

    def _node(self, in_s: np.ndarray, in_c: np.ndarray) -> None:
        """``in_s`` and ``in_c`` are owned by this call and may be mutated."""
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Abort
        if time.perf_counter() > self.deadline:
            raise _Abort
        g, s = self.g, self.s
        if self.debug:
            assert not np.any(in_s & in_c)
            assert self._feasible(in_s)

        s_verts = np.flatnonzero(in_s)
        self._record(s_verts)
        pruned, deg, deg_s = _filter(g, in_s, in_c, self.lb, s, self.pair_rule)
        if pruned:
            return
        verts = np.flatnonzero(in_s | in_c)
        if self.debug:
            sub = np.zeros(g.n, np.uint8)
            sub[verts] = 1
            for v in verts:
                assert deg[v] == sub[g.neighbors(v)].sum()
        if bound_of_set(g.indptr, g.indices, verts, s, self.mode) <= self.lb:
            return
        total = len(verts)
        up = int(verts[np.argmin(deg[verts])])

        if deg[up] < total - s:
            if not in_s[up]:
                c2 = in_c.copy()
                c2[up] = 0
                self._node(in_s.copy(), c2)
                in_c[up] = 0
                in_s[up] = 1
                if not self._feasible(in_s):
                    return
            nbr = np.zeros(g.n, np.uint8)
            nbr[g.neighbors(up)] = 1
            outside_s = int(np.count_nonzero(in_s & (1 - nbr))) - 1  # minus u_p itself
            t = s - 1 - outside_s
            non = np.flatnonzero(in_c & (1 - nbr))
            non = non[np.lexsort((non, deg[non]))]
            if t <= 0:
                self._node(in_s, in_c & nbr)
                return
            t = min(t, len(non))
            # branch 1: exclude v_1
            c2 = in_c.copy()
            c2[non[0]] = 0
            self._node(in_s.copy(), c2)
            # branches 2..t: include v_1..v_{i-1}, exclude v_i
            for i in range(2, t + 1):
                s2 = in_s.copy()
                s2[non[:i - 1]] = 1
                if not self._feasible(s2):
                    return
                c2 = in_c.copy()
                c2[non[:i]] = 0
                self._node(s2, c2)
            # final branch: include v_1..v_t, keep only neighbours of u_p
            in_s[non[:t]] = 1
            if not self._feasible(in_s):
                return
            in_c[non[:t]] = 0
            self._node(in_s, in_c & nbr)
            return

        if self._feasible(in_s | in_c):
            self._record(verts)
            return
        cand = np.flatnonzero(in_c)
        u = int(cand[np.argmin(deg[cand])])
        in_c[u] = 0
        self._node(in_s.copy(), in_c.copy())
        in_s[u] = 1
        if self._feasible(in_s):
            self._node(in_s, in_c)


def bnb(g: Graph, s: int, S: Iterable[int] = (), C: Optional[Iterable[int]] = None, lb: int = 0,
        mode: int = PUB, pair_rule: bool = True) -> int:
    """max(lb, size of the largest s-bundle F with S <= F <= S | C)."""
    search = BranchAndBound(g, s, lb, mode=mode, pair_rule=pair_rule)
    return search.run(S, C)


def solve(g: Graph, config: SolverConfig) -> SolverResult:
    start = time.perf_counter()
    deadline = start + config.time_limit
    s = config.s
    mode = config.bound_kernel_mode

    if config.lb_mode == "none":
        incumbent = np.zeros(0, np.int64)
    else:
        incumbent = generate_lb(g, s, config.lb_mode)
    lb = len(incumbent)
    log.info("initial lower bound %d (%s)", lb, config.lb_mode)

    if config.preprocess:
        h, ids = reduce(g, s, lb, mode)
    else:
        h, ids = g, np.arange(g.n, dtype=np.int64)
    log.info("reduced graph: %d vertices, %d edges", h.n, h.m)

    search = BranchAndBound(h, s, lb, mode=mode, deadline=deadline,
                            node_limit=config.node_limit, debug=config.debug,
                            pair_rule=config.pair_rule)
    timed_out = False
    try:
        search.run()
    except _Abort:
        timed_out = True
        log.info("search stopped after %d nodes", search.nodes)

    witness = ids[search.best] if search.improved else incumbent
    witness = tuple(int(v) for v in np.sort(witness))
    if not induced_bundle_status(g.indptr, g.indices, np.asarray(witness, np.int64), s)[0] == FEASIBLE:
        raise RuntimeError("internal error: reported witness is not an s-bundle")
    return SolverResult(
        best_size=len(witness),
        witness=witness,
        tree_nodes=search.nodes,
        reduced_v=h.n,
        reduced_e=h.m,
        elapsed=time.perf_counter() - start,
        timed_out=timed_out,
        lb_size=lb,
    )
