"""Polynomial-time MWIS for p3-free, chord-free and oneedge(k)-free ordered graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .classify import family_pattern
from .core import OrderedGraph, SearchStats, Solution, WeightMap, mirror, require_free
from .core.bits import iter_bits
from .core.context import Ctx
from .core.flow import min_flow_with_lower_bounds


def solve_p3free(g: OrderedGraph, w: Optional[WeightMap] = None, validate: bool = False,
                 stats: Optional[SearchStats] = None) -> Solution:
    """Maximum-weight antichain of the right-neighbour order.

    In a p3-free graph, u <_P v iff u < v and uv is an edge is a partial
    order, and independent sets are exactly its antichains.  By weighted
    Dilworth duality the optimum is the minimum flow that pushes at least
    w(v) units through every vertex.
    """
    if validate:
        require_free(g, family_pattern("p3"), label="p3")
    ctx = Ctx(g, w, stats)
    ctx.stats.node()
    n = g.n
    if n == 0:
        return ctx.solution(0, 0)
    s, t = 0, 1
    vin = lambda v: 2 * v
    vout = lambda v: 2 * v + 1
    inf = sum(ctx.ws) + 1
    arcs = []
    for v in range(1, n + 1):
        arcs.append((s, vin(v), 0, inf))
        arcs.append((vin(v), vout(v), ctx.ws[v], inf))
        arcs.append((vout(v), t, 0, inf))
    for u, v in g.edges:
        arcs.append((vout(u), vin(v), 0, inf))
    value, reach = min_flow_with_lower_bounds(2 * n + 2, arcs, s, t)
    witness = 0
    for v in range(1, n + 1):
        if not reach[vin(v)] and reach[vout(v)]:
            witness |= 1 << v
    if ctx.weight(witness) != value or not ctx.is_independent(witness):
        raise AssertionError("min cut does not certify an antichain (input not p3-free?)")
    return ctx.solution(value, witness)


def _chordfree_forward(g: OrderedGraph, ws) -> int:
    n = g.n
    adj = g.adj
    r = list(ws)
    marked: List[int] = []
    for v in range(1, n + 1):
        if r[v] > 0:
            marked.append(v)
            for u in iter_bits(adj[v] >> (v + 1) << (v + 1)):
                r[u] -= r[v]
    chosen = 0
    for v in reversed(marked):
        if not adj[v] & chosen:
            chosen |= 1 << v
    return chosen


def solve_chordfree(g: OrderedGraph, w: Optional[WeightMap] = None, direction: str = "forward",
                    validate: bool = False, stats: Optional[SearchStats] = None) -> Solution:
    """Greedy on a perfect elimination ordering.

    ``forward``: the later neighbours of every vertex form a clique (no
    chord pattern).  ``mirrored``: the same on the reversed order, for
    chordrev-free inputs.
    """
    if direction not in ("forward", "mirrored"):
        raise ValueError(f"unknown direction {direction!r}")
    ctx = Ctx(g, w, stats)
    ctx.stats.node()
    if direction == "forward":
        if validate:
            require_free(g, family_pattern("chord"), label="chord")
        chosen = _chordfree_forward(g, ctx.ws)
    else:
        if validate:
            require_free(g, family_pattern("chordrev"), label="chordrev")
        n = g.n
        rev = (0,) + tuple(reversed(ctx.ws[1:]))
        mchosen = _chordfree_forward(mirror(g), rev)
        chosen = 0
        for v in iter_bits(mchosen):
            chosen |= 1 << (n + 1 - v)
    return ctx.solution(ctx.weight(chosen), chosen)


def solve_oneedgek(g: OrderedGraph, w: Optional[WeightMap] = None, k: int = 1,
                   validate: bool = False, stats: Optional[SearchStats] = None) -> Solution:
    """Prefix dynamic programme over the last k vertices of the solution.

    Tab[I] for an independent I of size k is the best weight of an
    independent set whose last k vertices are I; it only depends on
    I, so the prefix index is implicit (it is max(I)).  Smaller sets are
    scored directly.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if validate:
        require_free(g, family_pattern("oneedge", k), label=f"oneedge({k})")
    # oneedge(0)-free graphs are edgeless, hence oneedge(1)-free as well
    k = max(k, 1)
    ctx = Ctx(g, w, stats)
    adj, ws = g.adj, ctx.ws
    n = g.n

    best_val, best_set = 0, 0
    # independent sets with fewer than k vertices
    for size in range(1, k):
        for combo in combinations(range(1, n + 1), size):
            m = 0
            ok = True
            for v in combo:
                if adj[v] & m:
                    ok = False
                    break
                m |= 1 << v
            if ok:
                val = sum(ws[v] for v in combo)
                if val > best_val:
                    best_val, best_set = val, m

    tab: Dict[Tuple[int, ...], int] = {}
    back: Dict[Tuple[int, ...], Optional[Tuple[int, ...]]] = {}
    by_rest: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    # by_rest[J] lists table keys u + J (u < min J) already computed
    for v in range(1, n + 1):
        ctx.stats.nodes += 1
        for rest in combinations(range(1, v), k - 1):
            rmask = 0
            ok = not any(adj[v] >> x & 1 for x in rest)
            if ok:
                for x in rest:
                    if adj[x] & rmask:
                        ok = False
                        break
                    rmask |= 1 << x
            if not ok:
                continue
            key = rest + (v,)
            val = sum(ws[x] for x in key)  # I' = I minus v_i: the solution is I itself
            arg = None
            for prev in by_rest.get(rest, ()):
                u = prev[0]
                if adj[v] >> u & 1:
                    continue
                cand = tab[prev] + ws[v]
                if cand > val:
                    val, arg = cand, prev
            tab[key] = val
            back[key] = arg
            tail = key[1:]
            by_rest.setdefault(tail, []).append(key)
            if val > best_val:
                best_val, best_set = val, None
                best_key = key

    if best_set is None:
        chosen = 0
        key = best_key
        while key is not None:
            chosen |= 1 << key[-1]
            prev = back[key]
            if prev is None:
                for x in key:
                    chosen |= 1 << x
            key = prev
        best_set = chosen
    return ctx.solution(best_val, best_set)
