"""Order-preserving pattern matching by backtracking.

Two entry points share the same constraint model:

* :func:`find_pattern` assigns pattern vertices in position order and so
  returns the lexicographically least embedding.
* :func:`has_pattern` picks the most constrained pattern vertex first.  It
  answers the same yes/no question much faster on large sparse hosts and is
  what the reduction verifiers use.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from .bits import below, interval, iter_bits
from .graph import Embedding, OrderedGraph

INDUCED = "induced"
SUBGRAPH = "subgraph"


def _check_mode(mode: str) -> bool:
    if mode not in (INDUCED, SUBGRAPH):
        raise ValueError(f"unknown matching mode {mode!r}")
    return mode == INDUCED


def _initial_domains(g: OrderedGraph, h: OrderedGraph, within: int) -> List[int]:
    """Degree prefilter: a host vertex needs at least as many left and right
    neighbours as the pattern vertex it plays."""
    n = g.n
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    for v in iter_bits(within):
        a = g.adj[v] & within
        left[v] = (a & below(v)).bit_count()
        right[v] = (a >> (v + 1)).bit_count()
    doms = []
    for i in range(1, h.n + 1):
        hl = (h.adj[i] & below(i)).bit_count()
        hr = (h.adj[i] >> (i + 1)).bit_count()
        d = 0
        for v in iter_bits(within):
            if left[v] >= hl and right[v] >= hr:
                d |= 1 << v
        doms.append(d)
    return doms


def find_pattern(g: OrderedGraph, h: OrderedGraph, mode: str = INDUCED,
                 within: Optional[int] = None) -> Optional[Embedding]:
    """Lexicographically least order-preserving embedding of ``h`` into ``g``.

    ``within`` optionally restricts the host to a vertex mask.
    """
    induced = _check_mode(mode)
    k = h.n
    if within is None:
        within = g.full
    if k == 0:
        return ()
    if k > within.bit_count():
        return None
    doms = _initial_domains(g, h, within)
    hadj = h.adj
    gadj = g.adj
    emb = [0] * k

    def rec(i: int, doms: List[int]) -> bool:
        cand = doms[i]
        while cand:
            low = cand & -cand
            p = low.bit_length() - 1
            cand ^= low
            emb[i] = p
            if i == k - 1:
                return True
            after = ~((1 << (p + 1)) - 1)
            nd = list(doms)
            ok = True
            for f in range(i + 1, k):
                d = nd[f] & after
                if hadj[i + 1] >> (f + 1) & 1:
                    d &= gadj[p]
                elif induced:
                    d &= ~gadj[p]
                # f needs room for the pattern vertices strictly between i and f
                if (d >> (p + f - i)) == 0:
                    ok = False
                    break
                nd[f] = d
            if ok and rec(i + 1, nd):
                return True
        return False

    if rec(0, doms):
        return tuple(emb)
    return None


def has_pattern(g: OrderedGraph, h: OrderedGraph, mode: str = INDUCED,
                within: Optional[int] = None,
                fixed: Optional[Dict[int, int]] = None) -> Optional[Embedding]:
    """Some embedding of ``h`` into ``g`` (not necessarily the least one).

    ``fixed`` maps pattern positions (1-based) to host positions that the
    embedding must use.
    """
    induced = _check_mode(mode)
    k = h.n
    if within is None:
        within = g.full
    if k == 0:
        return ()
    if k > within.bit_count():
        return None
    n = g.n
    base = _initial_domains(g, h, within)
    hadj = h.adj
    gadj = g.adj
    pos = [0] * k  # 0 means unassigned

    def domain(f: int, cons: int) -> int:
        lo, hi = 0, n + 1
        lo_i, hi_i = -1, k
        for j in range(f - 1, -1, -1):
            if pos[j]:
                lo, lo_i = pos[j], j
                break
        for j in range(f + 1, k):
            if pos[j]:
                hi, hi_i = pos[j], j
                break
        # leave room for unassigned pattern vertices on either side
        return cons & interval(lo + (f - lo_i), hi - (hi_i - f))

    def assign(cons: List[int], f: int, p: int) -> List[int]:
        low = 1 << p
        nc = list(cons)
        for t in range(k):
            if pos[t] or t == f:
                continue
            if hadj[f + 1] >> (t + 1) & 1:
                nc[t] &= gadj[p]
            elif induced:
                nc[t] &= ~gadj[p]
            nc[t] &= ~low
        pos[f] = p
        return nc

    def rec(cons: List[int], remaining: int) -> bool:
        if remaining == 0:
            return True
        best_f, best_d, best_c = -1, 0, 1 << 62
        for f in range(k):
            if pos[f]:
                continue
            d = domain(f, cons[f])
            c = d.bit_count()
            if c == 0:
                return False
            if c < best_c:
                best_f, best_d, best_c = f, d, c
        f = best_f
        d = best_d
        while d:
            low = d & -d
            p = low.bit_length() - 1
            d ^= low
            if rec(assign(cons, f, p), remaining - 1):
                return True
            pos[f] = 0
        return False

    cons = base
    if fixed:
        for f, p in sorted(fixed.items(), key=lambda t: t[1]):
            f -= 1
            if not domain(f, cons[f]) >> p & 1:
                return None
            cons = assign(cons, f, p)
    if rec(cons, k - (len(fixed) if fixed else 0)):
        return tuple(pos)
    return None


def contains(g: OrderedGraph, h: OrderedGraph, mode: str = INDUCED) -> bool:
    return has_pattern(g, h, mode) is not None


def is_free(g: OrderedGraph, h: OrderedGraph, mode: str = INDUCED,
            within: Optional[int] = None) -> bool:
    return has_pattern(g, h, mode, within) is None


def anchored_match(g: OrderedGraph, h: OrderedGraph, u: int, v: int,
                   mode: str = INDUCED) -> bool:
    """Whether ``g`` has an occurrence of ``h`` that uses edge uv as a
    pattern edge.  Used to keep graphs H-free while inserting edges."""
    if u > v:
        u, v = v, u
    for a, b in h.edges:
        if has_pattern(g, h, mode, fixed={a: u, b: v}) is not None:
            return True
    return False


def require_free(g: OrderedGraph, h: OrderedGraph, mode: str = INDUCED, label: str = "") -> None:
    from .graph import ValidationError

    emb = has_pattern(g, h, mode)
    if emb is not None:
        name = label or h.literal()
        raise ValidationError(f"instance contains {name} at positions {list(emb)}", emb)
