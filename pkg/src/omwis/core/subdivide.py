"""Double subdivision of an edge: xy becomes the path x-a-b-y.

The order of the result is irrelevant to the invariant (alpha grows by one),
so the two fresh vertices are simply appended.
"""

from __future__ import annotations

from .graph import Edge, GraphError, OrderedGraph


def poljak_double_subdivide(g: OrderedGraph, e: Edge) -> OrderedGraph:
    x, y = sorted(e)
    if (x, y) not in g.edges:
        raise GraphError(f"edge {x}-{y} not in graph")
    a, b = g.n + 1, g.n + 2
    edges = set(g.edges)
    edges.remove((x, y))
    edges.update({(x, a), (a, b), (y, b)})
    return OrderedGraph(g.n + 2, frozenset(edges))


def subdivide_all(g: OrderedGraph) -> OrderedGraph:
    """Double subdivision of every edge of ``g``."""
    out = g
    for e in g.sorted_edges():
        out = poljak_double_subdivide(out, e)
    return out
