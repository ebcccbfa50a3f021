"""Strategies and deliberately naive reference implementations.

The naive functions here share no code with the package: they enumerate
subsets and increasing maps with itertools and nothing else.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from hypothesis import strategies as st

from omwis.core import OrderedGraph, WeightMap


def pairs(n: int) -> List[Tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


@st.composite
def ordered_graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    ps = pairs(n)
    chosen = draw(st.lists(st.booleans(), min_size=len(ps), max_size=len(ps)))
    return OrderedGraph(n, frozenset(p for p, c in zip(ps, chosen) if c))


@st.composite
def weighted_graphs(draw, min_n: int = 0, max_n: int = 8):
    g = draw(ordered_graphs(min_n, max_n))
    vals = draw(st.lists(st.fractions(min_value=Fraction(1, 4), max_value=9, max_denominator=4)
                         .filter(lambda x: x > 0), min_size=g.n, max_size=g.n))
    return g, WeightMap(tuple(vals))


def naive_alpha(g: OrderedGraph, w: Optional[WeightMap] = None) -> Fraction:
    best = Fraction(0)
    for r in range(g.n + 1):
        for s in itertools.combinations(range(1, g.n + 1), r):
            if all((a, b) not in g.edges for a, b in itertools.combinations(s, 2)):
                val = sum((w[v] if w else Fraction(1) for v in s), Fraction(0))
                best = max(best, val)
    return best


def naive_embeddings(g: OrderedGraph, h: OrderedGraph, mode: str) -> List[Tuple[int, ...]]:
    """Every increasing map of h into g, in lexicographic order."""
    out = []
    for img in itertools.combinations(range(1, g.n + 1), h.n):
        ok = True
        for a, b in itertools.combinations(range(1, h.n + 1), 2):
            in_h = (a, b) in h.edges
            in_g = (img[a - 1], img[b - 1]) in g.edges
            if in_h and not in_g:
                ok = False
            elif mode == "induced" and in_g and not in_h:
                ok = False
            if not ok:
                break
        if ok:
            out.append(img)
    return out


def is_induced_sub(h: OrderedGraph, big: OrderedGraph) -> bool:
    return bool(naive_embeddings(big, h, "induced"))


def delete_position(g: OrderedGraph, p: int) -> OrderedGraph:
    keep = [v for v in range(1, g.n + 1) if v != p]
    idx = {v: i + 1 for i, v in enumerate(keep)}
    return OrderedGraph(g.n - 1, frozenset((idx[u], idx[v]) for u, v in g.edges
                                           if p not in (u, v)))


def independent(g: OrderedGraph, vs: Iterable[int]) -> bool:
    vs = sorted(vs)
    return all((a, b) not in g.edges for a, b in itertools.combinations(vs, 2))


def seagulls(g: OrderedGraph) -> List[Tuple[int, int, int]]:
    return [(x, y, z) for x, y, z in itertools.combinations(range(1, g.n + 1), 3)
            if (x, y) in g.edges and (y, z) in g.edges]


def naive_max_flow(n: int, arcs: List[Tuple[int, int, int]], s: int, t: int) -> int:
    """Minimum s-t cut capacity by enumerating every cut."""
    others = [v for v in range(n) if v not in (s, t)]
    best = None
    for r in range(len(others) + 1):
        for side in itertools.combinations(others, r):
            S = set(side) | {s}
            cap = sum(c for u, v, c in arcs if u in S and v not in S)
            best = cap if best is None else min(best, cap)
    return best
