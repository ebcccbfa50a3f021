"""Brute-force reference solver used by every test."""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .bits import iter_bits
from .graph import OrderedGraph, Solution, WeightMap, default_weights

DEFAULT_ORACLE_CAP = 24


class OracleCapExceeded(ValueError):
    pass


def alpha_brute(g: OrderedGraph, w: Optional[WeightMap] = None,
                cap: int = DEFAULT_ORACLE_CAP, within: Optional[int] = None) -> Solution:
    """Exact MWIS by exhaustive include/exclude over the smallest remaining
    position.  Ties prefer inclusion, which makes the witness the
    lexicographically least optimum set."""
    w = default_weights(g, w)
    if within is None:
        within = g.full
    if within.bit_count() > cap:
        raise OracleCapExceeded(f"{within.bit_count()} vertices exceed the oracle cap {cap}")
    t0 = time.perf_counter()
    adj = g.adj
    ws = w.scaled
    memo: Dict[int, Tuple[int, int]] = {0: (0, 0)}

    def best(s: int) -> Tuple[int, int]:
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

    val, wit = best(within)
    return Solution(Fraction(val, w.scale), frozenset(iter_bits(wit)), len(memo),
                    (time.perf_counter() - t0) * 1000)


def alpha_value(g: OrderedGraph, w: Optional[WeightMap] = None, cap: int = DEFAULT_ORACLE_CAP,
                within: Optional[int] = None) -> Fraction:
    return alpha_brute(g, w, cap, within).weight
