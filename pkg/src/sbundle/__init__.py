"""Exact maximum s-bundle search.

An s-bundle is a vertex set ``S`` whose induced subgraph has vertex
connectivity at least ``|S| - s``.  :func:`solve` finds a largest one.
"""
from ._accel import JIT_ENABLED
from .bounds import color_bound, partition_bound, partition_sets
from .connectivity import (bundle_certificate, can_extend, induces_s_bundle, is_s_bundle,
                           local_connectivity, vertex_connectivity_at_least)
from .graph import Graph, InvalidInputError, induced_subgraph
from .io import ParseError, ResultRecord, parse_graph, read_graph, read_results, write_results
from .lower_bound import generate_lb, greedy_clique
from .reduction import reduce
from .search import SolverConfig, SolverResult, bnb, reduce_candidates, solve

__version__ = "0.1.0"

__all__ = [
    "JIT_ENABLED", "Graph", "InvalidInputError", "ParseError", "ResultRecord", "SolverConfig",
    "SolverResult", "bnb", "bundle_certificate", "can_extend", "color_bound", "generate_lb",
    "greedy_clique", "induced_subgraph", "induces_s_bundle", "is_s_bundle", "local_connectivity",
    "parse_graph", "partition_bound", "partition_sets", "read_graph", "read_results", "reduce",
    "reduce_candidates", "solve", "vertex_connectivity_at_least", "write_results",
]
