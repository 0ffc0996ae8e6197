"""Extremal Randić index realizations via perfect b-matching."""

from .bmatching import Infeasible, Matching, MatchingInstance, max_transform, solve_min_bipartite_bmatching, solve_min_bmatching
from .connector import ConnectReport, connect_by_two_switches, percent_difference
from .graph_core import DiGraph, SimpleGraph, degree_sequence, directed_randic, is_connected, randic_index
from .graphic import TwoSwitch, apply_two_switch, has_connected_realization, havel_hakimi, is_graphic
from .randic_opt import (
    OptimizationResult,
    maximize_randic,
    minimize_directed_randic,
    minimize_randic,
    normalization_report,
    normalized_randic,
)

__all__ = [
    "ConnectReport",
    "DiGraph",
    "Infeasible",
    "Matching",
    "MatchingInstance",
    "OptimizationResult",
    "SimpleGraph",
    "TwoSwitch",
    "apply_two_switch",
    "connect_by_two_switches",
    "degree_sequence",
    "directed_randic",
    "has_connected_realization",
    "havel_hakimi",
    "is_connected",
    "is_graphic",
    "max_transform",
    "maximize_randic",
    "minimize_directed_randic",
    "minimize_randic",
    "normalization_report",
    "normalized_randic",
    "percent_difference",
    "randic_index",
    "solve_min_bipartite_bmatching",
    "solve_min_bmatching",
]
