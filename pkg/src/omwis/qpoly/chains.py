"""ababk(k)-free graphs via chains of links.

A chain is a sequence of vertex sets X_1 < ... < X_r (r >= 3) such that
every edge lies inside a link, between consecutive links, or between X_1 and
X_r.  Refining at link j branches until X_j can be split in two while
keeping that property.  The outer loop refines the smallest link of each
type A, B, C (the three initial thirds) until each type has an empty link;
the remaining vertices then fall apart into three independent pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from ..classify import family_pattern
from ..core import OrderedGraph, SearchStats, Solution, WeightMap, require_free
from ..core.bits import above, below, bits, first, first_k, interval, iter_bits, last, to_mask
from ..core.context import Ctx

Links = Tuple[int, ...]
Types = Tuple[str, ...]


@dataclass(frozen=True)
class Chain:
    links: Links
    types: Types

    @classmethod
    def of(cls, links: Sequence[Sequence[int]], types: Optional[Sequence[str]] = None) -> "Chain":
        masks = tuple(to_mask(x) for x in links)
        return cls(masks, tuple(types) if types is not None else ("A",) * len(masks))

    def sets(self) -> List[List[int]]:
        return [bits(x) for x in self.links]

    @property
    def vertices(self) -> int:
        out = 0
        for x in self.links:
            out |= x
        return out


def chain_violations(adj, links: Links) -> List[Tuple[int, int]]:
    """Edges breaking the chain locality rule, or order/overlap problems."""
    bad = []
    r = len(links)
    prev_last = 0
    seen = 0
    for x in links:
        if x & seen:
            bad.append((-1, -1))
        if x and first(x) < prev_last:
            bad.append((-2, -2))
        if x:
            prev_last = last(x)
        seen |= x
    owner = {}
    for i, x in enumerate(links):
        for v in iter_bits(x):
            owner[v] = i
    for v, i in owner.items():
        for u in iter_bits(adj[v] & seen):
            j = owner[u]
            if u < v:
                continue
            lo, hi = min(i, j), max(i, j)
            if hi - lo <= 1 or (lo == 0 and hi == r - 1):
                continue
            bad.append((v, u))
    return bad


def _edges_between(adj, a: int, b: int) -> List[Tuple[int, int]]:
    out = []
    for v in iter_bits(a):
        for u in iter_bits(adj[v] & b):
            out.append((v, u))
    return out


def _pick(ctx: Ctx, cands: List[int], edges: List[Tuple[int, int]]) -> int:
    """Candidate whose closed neighbourhood meets the most edges."""
    best, best_cov = -1, -1
    for x in sorted(set(cands)):
        nb = ctx.adj[x] | (1 << x)
        cov = sum(1 for a, b in edges if (nb >> a & 1) or (nb >> b & 1))
        if cov > best_cov:
            best, best_cov = x, cov
    return best


def _greedy(ctx: Ctx, pool: List[int], start: int, k: int) -> List[int]:
    """Take vertices of ``pool`` in the given order, skipping N[U + start]."""
    blocked = ctx.adj[start] | (1 << start)
    out = []
    for x in pool:
        if len(out) == k:
            break
        if not blocked >> x & 1:
            out.append(x)
            blocked |= ctx.adj[x] | (1 << x)
    return out


Emit = Tuple[Links, Types, int, int]  # links, types, credit, chosen


def _branch(ctx: Ctx, links: Links, x: int, credit: int, chosen: int, include: bool):
    drop = ~(ctx.adj[x] | (1 << x)) if include else ~(1 << x)
    new = tuple(l & drop for l in links)
    if include:
        return new, credit + ctx.ws[x], chosen | (1 << x)
    return new, credit, chosen


def _interior(ctx: Ctx, links: Links, types: Types, j: int, k: int) -> Iterator[Emit]:
    adj = ctx.adj
    n = ctx.g.n
    Xj = links[j]

    def tree(Y: Links, credit: int, chosen: int) -> Iterator[Emit]:
        ctx.stats.nodes += 1
        Yp, Yj, Yn = Y[j - 1], Y[j], Y[j + 1]
        nb_p = ctx.nbhd(Yp)
        nb_n = ctx.nbhd(Yn)
        t = types[j]
        if not Yj & nb_p:
            yield Y[:j] + (0,) + Y[j:], types[:j] + (t,) + types[j:], credit, chosen
            return
        if not Yj & nb_n:
            yield Y[:j + 1] + (0,) + Y[j + 1:], types[:j] + (t,) + types[j:], credit, chosen
            return
        u_star = first(Yj & nb_n)
        v_star = last(Yj & nb_p)
        if v_star < u_star:
            left = Yj & interval(1, v_star)
            yield (Y[:j] + (left, Yj & ~left) + Y[j + 1:], types[:j] + (t,) + types[j:],
                   credit, chosen)
            return
        S = Yj & interval(u_star, v_star)
        E1 = _edges_between(adj, S, Yp)
        E2 = _edges_between(adj, S, Yn)
        S_tilde = sorted({a for a, _ in E1} | {a for a, _ in E2})
        if len(E1) >= len(E2):
            U = _greedy(ctx, S_tilde, u_star, k)
            partner = first(adj[u_star] & Yn)
            cands = U + [u_star, partner]
        else:
            U = _greedy(ctx, S_tilde[::-1], v_star, k)
            partner = last(adj[v_star] & Yp)
            cands = U + [v_star, partner]
        x = _pick(ctx, cands, E1 + E2)
        for include in (False, True):
            yield from tree(*_branch(ctx, Y, x, credit, chosen, include))

    for I in ctx.independent_subsets(Xj, 2 * k):
        NI = ctx.closed_nbhd(I)
        Y = tuple(l & ~NI for l in links)
        if I.bit_count() == 2 * k:
            keep = Y[j]
            if k > 0:
                I1 = first_k(I, k)
                I2 = I & ~I1
                keep &= above(last(I1), n) & below(first(I2))
        else:
            keep = 0
        Y = Y[:j] + (keep,) + Y[j + 1:]
        yield from tree(Y, ctx.weight(I), I)


def _first_link(ctx: Ctx, links: Links, types: Types, k: int) -> Iterator[Emit]:
    adj = ctx.adj
    n = ctx.g.n
    X1, Xr = links[0], links[-1]

    def tree(Y: Links, credit: int, chosen: int) -> Iterator[Emit]:
        ctx.stats.nodes += 1
        Y1, Y2, Yr = Y[0], Y[1], Y[-1]
        nb_2 = ctx.nbhd(Y2)
        nb_r = ctx.nbhd(Yr)
        t = types[0]
        tt = (t,) + types
        if not Y1 & nb_r:
            yield (0,) + Y, tt, credit, chosen
            return
        if not Y1 & nb_2:
            yield (Y1, 0) + Y[1:], tt, credit, chosen
            return
        u_star = first(Y1 & nb_2)
        v_star = last(Y1 & nb_r)
        if v_star < u_star:
            left = Y1 & interval(1, v_star)
            yield (left, Y1 & ~left) + Y[1:], tt, credit, chosen
            return
        S = Y1 & interval(u_star, v_star)
        E1 = _edges_between(adj, S, Y2)
        E2 = _edges_between(adj, S, Yr)
        S_tilde = sorted({a for a, _ in E1} | {a for a, _ in E2})
        if len(E1) >= len(E2):
            U = _greedy(ctx, S_tilde[::-1], v_star, k)
            partner = last(adj[v_star] & Yr)
            cands = U + [v_star, partner]
        else:
            U = _greedy(ctx, S_tilde, u_star, k)
            partner = first(adj[u_star] & Y2)
            cands = U + [u_star, partner]
        x = _pick(ctx, cands, E1 + E2)
        for include in (False, True):
            yield from tree(*_branch(ctx, Y, x, credit, chosen, include))

    for I1 in ctx.independent_subsets(X1, k):
        for Ir in ctx.independent_subsets(Xr & ~ctx.nbhd(I1), k):
            I = I1 | Ir
            NI = ctx.closed_nbhd(I)
            Y = [l & ~NI for l in links]
            if I1.bit_count() == k:
                if k > 0:
                    Y[0] &= below(first(I1))
            else:
                Y[0] = 0
            if Ir.bit_count() == k:
                if k > 0:
                    Y[-1] &= above(last(Ir), n)
            else:
                Y[-1] = 0
            yield from tree(tuple(Y), ctx.weight(I), I)


def _refine(ctx: Ctx, links: Links, types: Types, j: int, k: int) -> Iterator[Emit]:
    r = len(links)
    if r < 3:
        raise ValueError("a chain needs at least three links")
    if 0 < j < r - 1:
        yield from _interior(ctx, links, types, j, k)
    elif j == 0:
        yield from _first_link(ctx, links, types, k)
    elif j == r - 1:
        m = ctx.mirrored()
        flip = ctx.flip
        rl = tuple(flip(x) for x in reversed(links))
        rt = tuple(reversed(types))
        for out, ot, credit, chosen in _first_link(m, rl, rt, k):
            yield (tuple(flip(x) for x in reversed(out)), tuple(reversed(ot)), credit,
                   flip(chosen))
    else:
        raise ValueError(f"link index {j} out of range")


def refine_chain(g: OrderedGraph, w: Optional[WeightMap], chain: Chain, j: int, k: int
                 ) -> List[Tuple[Chain, Fraction, FrozenSet[int]]]:
    """All refinements of ``chain`` at link ``j`` (1-based) with their credits."""
    ctx = Ctx(g, w)
    if chain_violations(ctx.adj, chain.links):
        raise ValueError("not a chain")
    return [(Chain(l, t), Fraction(c, ctx.w.scale), frozenset(iter_bits(ch)))
            for l, t, c, ch in _refine(ctx, chain.links, chain.types, j - 1, k)]


def _smallest(links: Links, types: Types, lam: str) -> int:
    best, size = -1, None
    for i, (x, t) in enumerate(zip(links, types)):
        if t == lam and (size is None or x.bit_count() < size):
            best, size = i, x.bit_count()
    return best


def ababk_mask(ctx: Ctx, mask: int, k: int, parent: int = -1) -> Tuple[int, int]:
    stats = ctx.stats

    def solve(V: int, parent: int, action: str) -> Tuple[int, int]:
        me = stats.node(parent, action, 0)
        n = V.bit_count()
        if n <= 2:
            return ctx.brute(V)
        vs = bits(V)
        a, b = -(-n // 3), -(-2 * n // 3)
        links = (to_mask(vs[:a]), to_mask(vs[a:b]), to_mask(vs[b:]))
        return tree(links, ("A", "B", "C"), 0, 0, me)

    def tree(links: Links, types: Types, credit: int, chosen: int, parent: int) -> Tuple[int, int]:
        for lam in "ABC":
            i = _smallest(links, types, lam)
            if links[i]:
                me = stats.node(parent, f"refine {lam}@{i + 1}", credit)
                best, best_wit = -1, 0
                for l2, t2, c2, ch2 in _refine(ctx, links, types, i, k):
                    val, wit = tree(l2, t2, credit + c2, chosen | ch2, me)
                    if val > best:
                        best, best_wit = val, wit
                return best, best_wit
        iA, iB, iC = (_smallest(links, types, lam) for lam in "ABC")
        V1 = V2 = V3 = 0
        for i, x in enumerate(links):
            if i < iA or i > iC:
                V1 |= x
            elif iA < i < iB:
                V2 |= x
            elif iB < i < iC:
                V3 |= x
        total, wit = credit, chosen
        for part, name in ((V1, "outer"), (V2, "AB"), (V3, "BC")):
            if part:
                val, w2 = solve(part, parent, f"leaf {name}")
                total += val
                wit |= w2
        return total, wit

    return solve(mask, parent, "root")


def solve_ababk(g: OrderedGraph, w: Optional[WeightMap] = None, k: int = 0, validate: bool = False,
                stats: Optional[SearchStats] = None) -> Solution:
    if validate:
        require_free(g, family_pattern("ababk", k), label=f"ababk({k})")
    ctx = Ctx(g, w, stats)
    val, wit = ababk_mask(ctx, g.full, k)
    return ctx.solution(val, wit)
