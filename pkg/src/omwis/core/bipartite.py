"""Bipartite MWIS via König: total weight minus a minimum vertex cover,
the cover read off a minimum cut."""

from __future__ import annotations

import time
from collections import deque
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .bits import iter_bits
from .flow import FlowNetwork
from .graph import OrderedGraph, Solution, WeightMap, default_weights


class NotBipartite(ValueError):
    def __init__(self, cycle: List[int]):
        super().__init__(f"odd cycle {cycle}")
        self.cycle = cycle


def two_coloring(adj: Sequence[int], within: int) -> Tuple[int, int]:
    """Split ``within`` into two independent masks or raise NotBipartite."""
    color: Dict[int, int] = {}
    parent: Dict[int, int] = {}
    sides = [0, 0]
    for root in iter_bits(within):
        if root in color:
            continue
        color[root] = 0
        parent[root] = 0
        sides[0] |= 1 << root
        q = deque([root])
        while q:
            u = q.popleft()
            for v in iter_bits(adj[u] & within):
                if v not in color:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    sides[color[v]] |= 1 << v
                    q.append(v)
                elif color[v] == color[u]:
                    raise NotBipartite(_odd_cycle(parent, u, v))
    return sides[0], sides[1]


def _odd_cycle(parent: Dict[int, int], u: int, v: int) -> List[int]:
    def chain(x):
        out = [x]
        while parent[x]:
            x = parent[x]
            out.append(x)
        return out

    pu, pv = chain(u), chain(v)
    common = set(pu) & set(pv)
    a = [x for x in pu if x not in common]
    b = [x for x in pv if x not in common]
    lca = next(x for x in pu if x in common)
    return a + [lca] + b[::-1]


def is_bipartite(adj: Sequence[int], within: int) -> bool:
    try:
        two_coloring(adj, within)
    except NotBipartite:
        return False
    return True


def bipartite_mwis_mask(adj: Sequence[int], ws: Sequence[int], left: int, right: int) -> Tuple[int, int]:
    """MWIS of the bipartite graph on left|right with integer weights ``ws``.

    Returns (value, witness mask).  Isolated vertices are taken directly and
    kept out of the flow network.
    """
    verts = left | right
    take = 0
    value = 0
    lv, rv = [], []
    for v in iter_bits(verts):
        if adj[v] & verts:
            (lv if left >> v & 1 else rv).append(v)
        else:
            take |= 1 << v
            value += ws[v]
    if not lv:
        for v in rv:
            take |= 1 << v
            value += ws[v]
        return value, take
    if not rv:
        for v in lv:
            take |= 1 << v
            value += ws[v]
        return value, take

    idx = {}
    for i, v in enumerate(lv + rv):
        idx[v] = i + 2
    net = FlowNetwork(len(idx) + 2)
    s, t = 0, 1
    inf = sum(ws[v] for v in lv) + 1
    for v in lv:
        net.add_arc(s, idx[v], ws[v])
    for v in rv:
        net.add_arc(idx[v], t, ws[v])
    rmask = 0
    for v in rv:
        rmask |= 1 << v
    for u in lv:
        for v in iter_bits(adj[u] & rmask):
            net.add_arc(idx[u], idx[v], inf)
    cover = net.max_flow(s, t)
    reach = net.reachable(s)
    total = 0
    for v in lv:
        total += ws[v]
        if reach[idx[v]]:
            take |= 1 << v
    for v in rv:
        total += ws[v]
        if not reach[idx[v]]:
            take |= 1 << v
    return value + total - cover, take


def mwis_bipartite(g: OrderedGraph, w: Optional[WeightMap] = None,
                   parts: Optional[Tuple[Sequence[int], Sequence[int]]] = None) -> Solution:
    w = default_weights(g, w)
    t0 = time.perf_counter()
    if parts is None:
        left, right = two_coloring(g.adj, g.full)
    else:
        left = right = 0
        for v in parts[0]:
            left |= 1 << v
        for v in parts[1]:
            right |= 1 << v
        if left & right or (left | right) != g.full:
            raise ValueError("parts must partition the vertex set")
        for side in (left, right):
            for v in iter_bits(side):
                if g.adj[v] & side:
                    raise ValueError(f"part containing {v} is not independent")
    val, wit = bipartite_mwis_mask(g.adj, w.scaled, left, right)
    return Solution(Fraction(val, w.scale), frozenset(iter_bits(wit)), 1,
                    (time.perf_counter() - t0) * 1000)
