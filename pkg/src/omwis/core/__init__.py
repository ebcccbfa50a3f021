from .bipartite import NotBipartite, is_bipartite, mwis_bipartite, two_coloring
from .graph import (
    Embedding,
    GraphError,
    OrderedGraph,
    Pattern,
    SearchStats,
    Solution,
    ValidationError,
    WeightMap,
    as_pattern,
    check_solution,
    default_weights,
    fraction_str,
    mirror,
    mirror_positions,
)
from .io import ParseError, format_graph, parse_graph, parse_pattern_literal
from .matching import (
    INDUCED,
    SUBGRAPH,
    anchored_match,
    contains,
    find_pattern,
    has_pattern,
    is_free,
    require_free,
)
from .oracle import DEFAULT_ORACLE_CAP, OracleCapExceeded, alpha_brute, alpha_value
from .subdivide import poljak_double_subdivide, subdivide_all

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "Embedding",
    "GraphError",
    "INDUCED",
    "NotBipartite",
    "OracleCapExceeded",
    "OrderedGraph",
    "ParseError",
    "Pattern",
    "SUBGRAPH",
    "SearchStats",
    "Solution",
    "ValidationError",
    "WeightMap",
    "alpha_brute",
    "alpha_value",
    "anchored_match",
    "as_pattern",
    "check_solution",
    "contains",
    "default_weights",
    "find_pattern",
    "format_graph",
    "fraction_str",
    "has_pattern",
    "is_bipartite",
    "is_free",
    "mirror",
    "mirror_positions",
    "mwis_bipartite",
    "parse_graph",
    "parse_pattern_literal",
    "poljak_double_subdivide",
    "require_free",
    "subdivide_all",
    "two_coloring",
]
