"""Shared state for the branching solvers.

Solvers never copy graphs: a sub-instance is a vertex mask over the ambient
graph, which keeps original positions and makes lifting witnesses free.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .bipartite import bipartite_mwis_mask, two_coloring
from .bits import bits, iter_bits
from .graph import OrderedGraph, SearchStats, Solution, WeightMap, default_weights


class Ctx:
    def __init__(self, g: OrderedGraph, w: Optional[WeightMap] = None,
                 stats: Optional[SearchStats] = None):
        self.g = g
        self.w = default_weights(g, w)
        self.adj = g.adj
        self.ws = self.w.scaled
        self.stats = stats if stats is not None else SearchStats()
        self.t0 = time.perf_counter()
        self._mirror: Optional["Ctx"] = None
        if sys.getrecursionlimit() < 20000:
            sys.setrecursionlimit(20000)

    def mirrored(self) -> "Ctx":
        """Context for the reversed order, sharing the statistics."""
        if self._mirror is None:
            from .graph import mirror

            m = Ctx(mirror(self.g), self.w.reversed(), self.stats)
            m._mirror = self
            self._mirror = m
        return self._mirror

    def flip(self, mask: int) -> int:
        """Map a mask to the reversed order (position p to n+1-p)."""
        n = self.g.n
        return int(format(mask, f"0{n + 2}b")[::-1], 2)

    def weight(self, mask: int) -> int:
        ws = self.ws
        return sum(ws[v] for v in iter_bits(mask))

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def nbhd(self, mask: int) -> int:
        """Open neighbourhood of a set (may intersect the set)."""
        out = 0
        adj = self.adj
        for v in iter_bits(mask):
            out |= adj[v]
        return out

    def closed_nbhd(self, mask: int) -> int:
        return self.nbhd(mask) | mask

    def is_independent(self, mask: int) -> bool:
        adj = self.adj
        for v in iter_bits(mask):
            if adj[v] & mask:
                return False
        return True

    def edge_count(self, mask: int) -> int:
        adj = self.adj
        return sum((adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def components(self, mask: int) -> List[int]:
        out = []
        adj = self.adj
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= adj[v]
                grow &= rest & ~comp
                comp |= grow
                frontier = grow
            out.append(comp)
            rest &= ~comp
        return out

    def bipartite(self, mask: int) -> Tuple[int, int]:
        left, right = two_coloring(self.adj, mask)
        self.stats.nodes += 1
        return bipartite_mwis_mask(self.adj, self.ws, left, right)

    def brute(self, mask: int) -> Tuple[int, int]:
        """Exact MWIS on a small mask (base cases)."""
        adj, ws = self.adj, self.ws
        memo = {0: (0, 0)}

        def best(s):
            hit = memo.get(s)
            if hit is not None:
                return hit
            low = s & -s
            v = low.bit_length() - 1
            a, sa = best(s & ~low & ~adj[v])
            a += ws[v]
            b, sb = best(s & ~low)
            res = (a, sa | low) if a >= b else (b, sb)
            memo[s] = res
            return res

        return best(mask)

    def independent_subsets(self, mask: int, limit: Optional[int] = None) -> Iterator[int]:
        """Independent subsets of ``mask`` of size <= limit, by increasing size
        and lexicographically within a size."""
        vs = bits(mask)
        adj = self.adj
        top = len(vs) if limit is None else min(limit, len(vs))

        def rec(start: int, size: int, chosen: int, banned: int) -> Iterator[int]:
            if size == 0:
                yield chosen
                return
            for i in range(start, len(vs) - size + 1):
                v = vs[i]
                if banned >> v & 1:
                    continue
                yield from rec(i + 1, size - 1, chosen | (1 << v), banned | adj[v])

        for size in range(top + 1):
            yield from rec(0, size, 0, 0)

    def all_independent_subsets(self, mask: int) -> Iterator[int]:
        """Every independent subset of ``mask`` (inclusion/exclusion recursion)."""
        adj = self.adj

        def rec(rest: int, chosen: int) -> Iterator[int]:
            if not rest:
                yield chosen
                return
            low = rest & -rest
            v = low.bit_length() - 1
            yield from rec(rest & ~low, chosen)
            yield from rec(rest & ~low & ~adj[v], chosen | low)

        yield from rec(mask, 0)

    def solution(self, value: int, witness: int) -> Solution:
        return Solution(Fraction(value, self.w.scale), frozenset(iter_bits(witness)),
                        self.stats.nodes, (time.perf_counter() - self.t0) * 1000)
