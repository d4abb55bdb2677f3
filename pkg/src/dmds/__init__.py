"""Minimum dominating set via dual-mode local search (DmDS)."""

from .construct import greed_construct, initialize, perturbation_construct
from .graph import (
    Graph,
    GraphFormatError,
    build_from_edges,
    format_edge_list,
    is_dominating_set,
    parse_edge_list,
    read_edge_list,
)
from .oracle import exact_min_dominating_set, verify_solution
from .reductions import ReductionOutcome, apply_reductions
from .search import RunReport, SearchConfig, solve
from .state import SolverState, init_state, recompute_scores

__all__ = [
    "Graph",
    "GraphFormatError",
    "ReductionOutcome",
    "RunReport",
    "SearchConfig",
    "SolverState",
    "apply_reductions",
    "build_from_edges",
    "exact_min_dominating_set",
    "format_edge_list",
    "greed_construct",
    "init_state",
    "initialize",
    "is_dominating_set",
    "parse_edge_list",
    "perturbation_construct",
    "read_edge_list",
    "recompute_scores",
    "solve",
    "verify_solution",
]
