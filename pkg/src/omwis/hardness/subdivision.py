"""Orderings of subdivided graphs.

Replacing an edge by a path with two new inner vertices raises alpha by
exactly one, so any such construction keeps MIS equivalent with a known
offset; the schemes below only differ in where the new vertices go.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from ..core import OrderedGraph
from .base import ReductionOutput

TWO_SCHEMES = ("LR", "RL", "RcoreL", "coreLR")
LONG_VARIANTS = ("straight", "flip")


def _place(keys: Dict[object, tuple]) -> Dict[object, int]:
    order = sorted(keys, key=lambda v: keys[v])
    return {v: i + 1 for i, v in enumerate(order)}


def gen_two_subdivision(g: OrderedGraph, k: int, scheme: str) -> ReductionOutput:
    """Subdivide every edge uv (u < v) into u - l_e - r_e - v and order the
    dummies per ``scheme``; threshold k + |E|."""
    if scheme not in TWO_SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {TWO_SCHEMES}")
    edges = g.sorted_edges()
    keys: Dict[object, tuple] = {}
    for v in g.vertices:
        keys[("core", v)] = (1, v, 0)
    for t, _ in enumerate(edges):
        if scheme == "LR":
            keys[("l", t)], keys[("r", t)] = (2, t, 0), (2, t, 1)
        elif scheme == "RL":
            keys[("l", t)], keys[("r", t)] = (2, t, 1), (2, t, 0)
        elif scheme == "RcoreL":
            keys[("r", t)], keys[("l", t)] = (0, t, 0), (2, t, 0)
        else:
            keys[("l", t)], keys[("r", t)] = (2, t, 0), (3, t, 0)
    pos = _place(keys)
    out = []
    for t, (u, v) in enumerate(edges):
        cu, cv, l, r = pos[("core", u)], pos[("core", v)], pos[("l", t)], pos[("r", t)]
        out += [(cu, l), (l, r), (r, cv)]
    graph = OrderedGraph(len(pos), frozenset(out))
    core = [pos[("core", v)] for v in g.vertices]
    return ReductionOutput(graph, k + g.m, scheme, g.m, {"core": core, "edges": len(edges)})


def gen_long_subdivision(g: OrderedGraph, k: int, variant: str) -> ReductionOutput:
    """Layered subdivision: edge number t (lexicographic) becomes a path
    through layers 1..t and back; the closing edge on top is then subdivided
    once more, with the new vertices interleaved into its segment so the
    added count is even."""
    if variant not in LONG_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {LONG_VARIANTS}")
    edges = g.sorted_edges()
    m = len(edges)
    keys: Dict[object, tuple] = {}
    for v in g.vertices:
        keys[("core", v)] = (0, v, 0, 0)
    # step 1: vertices ("s", i, t, side) with side 0 near u and 1 near v
    for t, (u, v) in enumerate(edges, start=1):
        for i in range(1, t + 1):
            for side, owner in ((0, u), (1, v)):
                rank = (owner, t)
                if variant == "flip" and i % 2 == 1:
                    rank = (-owner, -t)
                keys[("s", i, t, side)] = (i,) + rank + (0,)
    layer_order: Dict[int, List[object]] = {}
    for key in sorted(keys, key=lambda x: keys[x]):
        layer_order.setdefault(keys[key][0], []).append(key)

    out_edges: List[Tuple[object, object]] = []
    for t, (u, v) in enumerate(edges, start=1):
        chain = [("core", u)] + [("s", i, t, 0) for i in range(1, t + 1)]
        chain += [("s", i, t, 1) for i in range(t, 0, -1)] + [("core", v)]
        out_edges += list(zip(chain, chain[1:]))
    subdivisions = sum(range(1, m + 1))

    # step 2: re-route each top edge through vertices interleaved in its segment
    fine: Dict[object, tuple] = {key: (keys[key], 0, 0) for key in keys}
    extra = 0
    for t in range(1, m + 1):
        a, b = ("s", t, t, 0), ("s", t, t, 1)
        layer = layer_order[t]
        ia, ib = layer.index(a), layer.index(b)
        if ia > ib:
            a, b, ia, ib = b, a, ib, ia
        seg = layer[ia:ib + 1]
        span = len(seg) - 1
        omegas = []
        for i in range(span):
            w = ("w", t, i)
            fine[w] = (keys[seg[i]], 1, i)
            omegas.append(w)
        if span % 2 == 1:
            w = ("w", t, span)
            fine[w] = (keys[seg[span - 1]], 1, span)
            omegas.append(w)
        out_edges.remove((("s", t, t, 0), ("s", t, t, 1)))
        path = [a] + omegas + [b]
        out_edges += list(zip(path, path[1:]))
        extra += len(omegas) // 2
    subdivisions += extra
    fpos = _place(fine)
    graph = OrderedGraph(len(fpos), frozenset((fpos[x], fpos[y]) for x, y in out_edges))
    core = [fpos[("core", v)] for v in g.vertices]
    return ReductionOutput(graph, k + subdivisions, variant, subdivisions,
                           {"core": core, "step1": subdivisions - extra, "step2": extra})
