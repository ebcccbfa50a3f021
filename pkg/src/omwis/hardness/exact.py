"""Exact maximum independent set size for unit weights on large sparse graphs.

Reduction outputs run to thousands of vertices but are mostly long paths, so
the classical reduction rules shrink them to almost nothing before any
branching happens:

* degree 0 and 1: take the vertex;
* degree 2 inside a triangle: take the vertex;
* degree 2 otherwise: fold v and its two neighbours into one vertex (+1);
* domination: if N[u] is inside N[v] for an edge uv, drop v.

Components are solved separately; what is left is branched on a vertex of
maximum degree.
"""

from __future__ import annotations

from typing import Dict, Iterable, Set, Tuple

from ..core import OrderedGraph

Adj = Dict[int, Set[int]]


def _adjacency(g: OrderedGraph) -> Adj:
    adj: Adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _remove(adj: Adj, vs: Iterable[int], dirty: Set[int]) -> None:
    for v in list(vs):
        nb = adj.pop(v, None)
        if nb is None:
            continue
        for u in nb:
            s = adj.get(u)
            if s is not None:
                s.discard(v)
                dirty.add(u)
    dirty.difference_update(vs)


class _Counter:
    def __init__(self, start: int):
        self.next = start
        self.branches = 0


def _reduce(adj: Adj, ctr: _Counter) -> int:
    """Apply the low-degree rules to exhaustion; returns the vertices gained."""
    gained = 0
    dirty = set(adj)
    while dirty:
        v = dirty.pop()
        nb = adj.get(v)
        if nb is None:
            continue
        d = len(nb)
        if d == 0:
            del adj[v]
            gained += 1
        elif d == 1:
            gained += 1
            _remove(adj, [v] + list(nb), dirty)
        elif d == 2:
            a, b = nb
            if b in adj[a]:
                gained += 1
                _remove(adj, [v, a, b], dirty)
            else:
                # fold: alpha(G) = 1 + alpha(G with a, v, b merged)
                merged = (adj[a] | adj[b]) - {a, b, v}
                x = ctr.next
                ctr.next += 1
                _remove(adj, [v, a, b], dirty)
                adj[x] = set(merged)
                for u in merged:
                    adj[u].add(x)
                    dirty.add(u)
                dirty.add(x)
                gained += 1
    return gained


def _dominated(adj: Adj) -> Set[int]:
    out: Set[int] = set()
    for v, nv in adj.items():
        if v in out:
            continue
        cv = nv | {v}
        for u in nv:
            if u in out:
                continue
            nu = adj[u]
            if len(nu) <= len(nv) and nu <= cv:
                out.add(v)
                break
    return out


def _components(adj: Adj):
    seen: Set[int] = set()
    for s in adj:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    comp.add(u)
                    stack.append(u)
        yield comp


def _solve(adj: Adj, ctr: _Counter) -> int:
    total = 0
    while True:
        total += _reduce(adj, ctr)
        if not adj:
            return total
        dom = _dominated(adj)
        if not dom:
            break
        _remove(adj, dom, set())
    comps = list(_components(adj))
    if len(comps) > 1:
        for c in comps:
            sub = {v: adj[v] & c for v in c}
            total += _solve(sub, ctr)
        return total
    ctr.branches += 1
    v = max(adj, key=lambda x: (len(adj[x]), -x))
    take = {u: set(s) for u, s in adj.items()}
    _remove(take, [v] + list(adj[v]), set())
    skip = {u: set(s) for u, s in adj.items()}
    _remove(skip, [v], set())
    return total + max(1 + _solve(take, ctr), _solve(skip, ctr))


def mis_size(g: OrderedGraph) -> int:
    """Size of a maximum independent set of ``g`` (unit weights)."""
    return mis_size_stats(g)[0]


def mis_size_stats(g: OrderedGraph) -> Tuple[int, int]:
    """(alpha, number of branchings)."""
    ctr = _Counter(g.n + 1)
    return _solve(_adjacency(g), ctr), ctr.branches
