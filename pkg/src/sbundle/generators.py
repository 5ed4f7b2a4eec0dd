"""Small graph families and deterministic benchmark constructions."""
from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """Vertex 0 is the centre."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gnp(n: int, p: float, seed=None) -> Graph:
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    return Graph.from_edges(n, zip(iu[keep], ju[keep]))


def c_fat(n: int, c: float) -> Graph:
    """DIMACS ``c-fat`` graph: vertex ``i`` sits in cluster ``i mod k`` with
    ``k = floor(n / (c ln n))``; vertices are adjacent when their clusters are
    equal or cyclically consecutive.

    Reproduces the published vertex/edge counts, e.g. c-fat200-1 (200, 1534)
    and c-fat500-1 (500, 4459).
    """
    k = int(math.floor(n / (c * math.log(n))))
    cluster = np.arange(n) % k
    iu, ju = np.triu_indices(n, 1)
    diff = np.abs(cluster[iu] - cluster[ju])
    keep = (diff <= 1) | (diff == k - 1)
    return Graph.from_edges(n, zip(iu[keep], ju[keep]))


def hamming(bits: int, distance: int) -> Graph:
    """Words of ``bits`` bits, adjacent when their Hamming distance is at least ``distance``."""
    n = 1 << bits
    iu, ju = np.triu_indices(n, 1)
    x = iu ^ ju
    pop = np.zeros(len(x), dtype=np.int64)
    for b in range(bits):
        pop += (x >> b) & 1
    keep = pop >= distance
    return Graph.from_edges(n, zip(iu[keep], ju[keep]))
