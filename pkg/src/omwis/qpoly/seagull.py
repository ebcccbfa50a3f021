"""aabb-free graphs: branch on vertices that hit many seagulls.

A seagull is x < y < z with xy and yz edges.  Without seagulls every vertex
has neighbours on one side only, so the graph is bipartite.  In an aabb-free
graph any two seagulls touch or are joined by an edge, so some vertex of any
seagull has a closed neighbourhood meeting a third of them.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from ..classify import family_pattern
from ..core import NotBipartite, OrderedGraph, SearchStats, Solution, WeightMap, require_free
from ..core.bipartite import bipartite_mwis_mask, two_coloring
from ..core.bits import below, iter_bits
from ..core.context import Ctx

Seagull = Tuple[int, int, int]


def enumerate_seagulls(g: OrderedGraph, within: Optional[int] = None) -> List[Seagull]:
    s = g.full if within is None else within
    adj = g.adj
    out = []
    for y in iter_bits(s):
        left = adj[y] & s & below(y)
        right = (adj[y] & s) >> (y + 1) << (y + 1)
        if not left or not right:
            continue
        for x in iter_bits(left):
            for z in iter_bits(right):
                out.append((x, y, z))
    out.sort()
    return out


def count_seagulls(adj, s: int) -> int:
    total = 0
    for y in iter_bits(s):
        a = adj[y] & s
        if a:
            total += (a & below(y)).bit_count() * (a >> (y + 1)).bit_count()
    return total


def first_seagull(adj, s: int) -> Optional[Seagull]:
    for x in iter_bits(s):
        for y in iter_bits((adj[x] & s) >> (x + 1) << (x + 1)):
            right = (adj[y] & s) >> (y + 1) << (y + 1)
            if right:
                return x, y, (right & -right).bit_length() - 1
    return None


def _branch_vertex(adj, s: int) -> int:
    sg = first_seagull(adj, s)
    if sg is None:
        raise ValueError("no seagulls")
    total = count_seagulls(adj, s)
    best, best_cov = 0, -1
    for v in sg:  # already increasing, so ties keep the smaller position
        cov = total - count_seagulls(adj, s & ~(adj[v] | (1 << v)))
        if cov > best_cov:
            best, best_cov = v, cov
    return best


def branch_vertex_aabb(g: OrderedGraph, within: Optional[int] = None) -> int:
    return _branch_vertex(g.adj, g.full if within is None else within)


def solve_aabb(g: OrderedGraph, w: Optional[WeightMap] = None, validate: bool = False,
               stats: Optional[SearchStats] = None, within: Optional[int] = None) -> Solution:
    if validate:
        require_free(g, family_pattern("aakbb", 0), label="aabb")
    ctx = Ctx(g, w, stats)
    val, wit = aabb_mask(ctx, g.full if within is None else within)
    return ctx.solution(val, wit)


def aabb_mask(ctx: Ctx, mask: int, parent: int = -1) -> Tuple[int, int]:
    adj, ws, stats = ctx.adj, ctx.ws, ctx.stats
    best_val, best_wit = 0, 0

    def rec(s: int, parent: int, action: str, credit: int) -> Tuple[int, int]:
        me = stats.node(parent, action, credit)
        total, wit = 0, 0
        for comp in ctx.components(s):
            try:
                left, right = two_coloring(adj, comp)
            except NotBipartite:
                v = _branch_vertex(adj, comp)
                a, wa = rec(comp & ~(1 << v), me, f"exclude {v}", 0)
                b, wb = rec(comp & ~(adj[v] | (1 << v)), me, f"include {v}", ws[v])
                b += ws[v]
                if b >= a:
                    total += b
                    wit |= wb | (1 << v)
                else:
                    total += a
                    wit |= wa
                continue
            val, w2 = bipartite_mwis_mask(adj, ws, left, right)
            total += val
            wit |= w2
        return total, wit

    best_val, best_wit = rec(mask, parent, "root", 0)
    return best_val, best_wit
