"""Exact maximum weight independent set on ordered graphs avoiding a fixed
ordered pattern."""

from .classify import ComplexityClass, classify, family_pattern, resolve_pattern
from .core import (
    OrderedGraph,
    Pattern,
    Solution,
    WeightMap,
    alpha_brute,
    find_pattern,
    mirror,
    mwis_bipartite,
    parse_graph,
)
from .dispatch import pacman_reduce, solve_auto, solve_generic
from .poly import solve_chordfree, solve_oneedgek, solve_p3free
from .qpoly import solve_aabb, solve_aakbb, solve_ababk
from .subexp import partition_segments, solve_abbak

__version__ = "0.1.0"

__all__ = [
    "ComplexityClass",
    "OrderedGraph",
    "Pattern",
    "Solution",
    "WeightMap",
    "alpha_brute",
    "classify",
    "family_pattern",
    "find_pattern",
    "mirror",
    "mwis_bipartite",
    "pacman_reduce",
    "parse_graph",
    "partition_segments",
    "resolve_pattern",
    "solve_aabb",
    "solve_aakbb",
    "solve_ababk",
    "solve_abbak",
    "solve_auto",
    "solve_chordfree",
    "solve_generic",
    "solve_oneedgek",
    "solve_p3free",
]
