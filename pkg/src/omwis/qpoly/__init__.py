from .chains import Chain, chain_violations, refine_chain, solve_ababk
from .seagull import branch_vertex_aabb, count_seagulls, enumerate_seagulls, solve_aabb
from .structured import RefinedInstance, StructuredInstance, halve_workspace, solve_aakbb

__all__ = [
    "Chain",
    "RefinedInstance",
    "StructuredInstance",
    "branch_vertex_aabb",
    "chain_violations",
    "count_seagulls",
    "enumerate_seagulls",
    "halve_workspace",
    "refine_chain",
    "solve_aabb",
    "solve_aakbb",
    "solve_ababk",
]
