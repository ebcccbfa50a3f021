"""Seeded random instances.

Randomness comes from numpy's SeedSequence so that every (seed, key...)
pair gives an independent, reproducible stream.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence

import numpy as np

from .core import OrderedGraph, WeightMap, anchored_match


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in keys)))


def random_graph(rng: np.random.Generator, n: int, p: float) -> OrderedGraph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return OrderedGraph(n, frozenset(edges))


def random_weights(rng: np.random.Generator, n: int, rational: bool = True,
                   top: int = 9) -> WeightMap:
    vals = []
    for _ in range(n):
        num = int(rng.integers(1, top + 1))
        den = int(rng.integers(1, 4)) if rational else 1
        vals.append(Fraction(num, den))
    return WeightMap(tuple(vals))


def random_free_graph(rng: np.random.Generator, n: int, h: OrderedGraph, p: float,
                      mode: str = "induced", base: Optional[OrderedGraph] = None) -> OrderedGraph:
    """Insert random pairs one at a time, skipping any that would create ``h``.

    Starting from an ``h``-free graph, a new copy of ``h`` must use the new
    edge as one of its pattern edges, so an anchored search suffices.
    """
    if h.m == 0:
        raise ValueError("cannot avoid an edgeless pattern by adding edges")
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    order = rng.permutation(len(pairs))
    edges = set(base.edges) if base is not None else set()
    g = OrderedGraph(n, frozenset(edges))
    for idx in order:
        if rng.random() >= p:
            continue
        u, v = pairs[int(idx)]
        if (u, v) in edges:
            continue
        trial = OrderedGraph(n, frozenset(edges | {(u, v)}))
        if not anchored_match(trial, h, u, v, mode):
            edges.add((u, v))
            g = trial
    return g


def random_free_graph_multi(rng: np.random.Generator, n: int, patterns: Sequence[OrderedGraph],
                            p: float, mode: str = "induced") -> OrderedGraph:
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    order = rng.permutation(len(pairs))
    edges: set = set()
    g = OrderedGraph(n, frozenset())
    for idx in order:
        if rng.random() >= p:
            continue
        u, v = pairs[int(idx)]
        trial = OrderedGraph(n, frozenset(edges | {(u, v)}))
        if not any(anchored_match(trial, h, u, v, mode) for h in patterns):
            edges.add((u, v))
            g = trial
    return g


def all_ordered_graphs(n: int) -> Iterator[OrderedGraph]:
    """Every ordered graph on n positions (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield OrderedGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def graphs_up_to_isomorphism(n: int) -> List[OrderedGraph]:
    """One ordered representative (the lexicographically least edge list)
    of each unordered graph on n vertices."""
    perms = list(itertools.permutations(range(1, n + 1)))
    seen = set()
    out = []
    for g in all_ordered_graphs(n):
        forms = [tuple(sorted(tuple(sorted((p[u - 1], p[v - 1]))) for u, v in g.edges))
                 for p in perms]
        canon = min(forms)
        if canon not in seen:
            seen.add(canon)
            out.append(OrderedGraph(n, frozenset(canon)))
    return out
