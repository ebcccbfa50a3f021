"""abbak(k)-free graphs in subexponential time.

After branching away every vertex of degree at least tau = ceil(n^(1/3)),
each component is cut into consecutive segments Z_1, Z_2, ... where only
Z_i can send edges beyond Z_1..Z_i.  Inside a segment, the roof (all the
spanning-edge endpoints) together with two small greedy guard sets dominates
everything that is not independent, so once a few small separator sets are
guessed, the middle of the component is bipartite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .classify import family_pattern
from .core import NotBipartite, OrderedGraph, SearchStats, Solution, WeightMap, require_free
from .core.bipartite import bipartite_mwis_mask, two_coloring
from .core.bits import bits, first, interval, iter_bits, last, to_mask
from .core.context import Ctx


class StructureError(AssertionError):
    """A structural property that holds for abbak(k)-free inputs failed."""


@dataclass
class Segment:
    x: int
    y: int
    Z: int
    first: int = 0
    last: int = 0


@dataclass
class SegmentDecomposition:
    segments: List[Segment] = field(default_factory=list)
    roof: int = 0

    def as_tuples(self) -> List[Tuple[int, int, List[int]]]:
        return [(s.x, s.y, bits(s.Z)) for s in self.segments]


def _segments(ctx: Ctx, comp: int) -> List[Segment]:
    adj = ctx.adj
    x1 = first(comp)
    nb = adj[x1] & comp
    if not nb:
        raise ValueError("partition needs a connected graph with at least two vertices")
    y1 = last(nb)
    segs = [Segment(x1, y1, comp & interval(x1, y1))]
    done = segs[0].Z
    while done != comp:
        rest = comp & ~done
        best = None
        for u in iter_bits(done):
            a = adj[u] & rest
            if a:
                v = last(a)
                if best is None or v > best[1]:
                    best = (u, v)
        if best is None:
            raise ValueError("partition needs a connected graph")
        x, y = best
        Z = rest & interval(1, y)
        segs.append(Segment(x, y, Z))
        done |= Z
    return segs


def _guards(ctx: Ctx, segs: List[Segment], k: int) -> int:
    adj = ctx.adj
    roof = 0
    for s in segs:
        roof |= (1 << s.x) | (1 << s.y)
    n_roof = ctx.closed_nbhd(roof)
    for s in segs:
        pool = s.Z & ~n_roof
        chosen, blocked = 0, 0
        for v in iter_bits(pool):
            if chosen.bit_count() == k:
                break
            if not blocked >> v & 1:
                chosen |= 1 << v
                blocked |= adj[v] | (1 << v)
        s.first = chosen
        pool = s.Z & ~n_roof & ~ctx.closed_nbhd(chosen)
        chosen, blocked = 0, 0
        for v in reversed(bits(pool)):
            if chosen.bit_count() == k:
                break
            if not blocked >> v & 1:
                chosen |= 1 << v
                blocked |= adj[v] | (1 << v)
        s.last = chosen
    return roof


def decompose(ctx: Ctx, comp: int, k: int) -> SegmentDecomposition:
    segs = _segments(ctx, comp)
    roof = _guards(ctx, segs, k)
    return SegmentDecomposition(segs, roof)


def partition_segments(g: OrderedGraph, k: int = 0) -> SegmentDecomposition:
    """Segment decomposition of a connected ordered graph with n >= 2."""
    ctx = Ctx(g)
    if g.n < 2 or len(ctx.components(g.full)) != 1:
        raise ValueError("partition needs a connected graph with at least two vertices")
    return decompose(ctx, g.full, k)


def guarded_remainder(ctx: Ctx, s: Segment, roof: int) -> int:
    """Z minus N[roof, First, Last]; independent in an abbak(k)-free graph.

    The guards are picked outside N[roof], so the whole roof has to be
    removed here, not only x and y: a vertex that survives must have been
    available to both greedy sweeps.
    """
    return s.Z & ~ctx.closed_nbhd(roof | s.first | s.last)


def tau_for(n: int) -> int:
    t = max(1, round(n ** (1 / 3)))
    while t ** 3 < n:
        t += 1
    while t > 1 and (t - 1) ** 3 >= n:
        t -= 1
    return t


def abbak_mask(ctx: Ctx, mask: int, k: int, tau: Optional[int] = None,
               check: bool = True) -> Tuple[int, int]:
    adj, ws, stats = ctx.adj, ctx.ws, ctx.stats
    n0 = max(mask.bit_count(), 1)
    if tau is None:
        tau = tau_for(n0)

    def solve(V: int, parent: int, action: str, credit: int) -> Tuple[int, int]:
        me = stats.node(parent, action, credit)
        if not V:
            return 0, 0
        # Step 1: high-degree branching
        best_v, best_d = 0, -1
        for v in iter_bits(V):
            d = (adj[v] & V).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        if best_d >= tau:
            v = best_v
            a, wa = solve(V & ~(1 << v), me, f"exclude {v}", 0)
            b, wb = solve(V & ~(adj[v] | (1 << v)), me, f"include {v}", ws[v])
            b += ws[v]
            return (b, wb | (1 << v)) if b >= a else (a, wa)
        total, wit = 0, 0
        for comp in ctx.components(V):
            if comp.bit_count() == 1:
                total += ws[first(comp)]
                wit |= comp
                continue
            val, w2 = component(comp, me)
            total += val
            wit |= w2
        return total, wit

    def component(C: int, parent: int) -> Tuple[int, int]:
        dec = decompose(ctx, C, k)
        segs = dec.segments
        if check:
            for s in segs:
                if not ctx.is_independent(guarded_remainder(ctx, s, dec.roof)):
                    raise StructureError("guarded segment remainder is not independent")
        vs = bits(C)
        nn = len(vs)
        third = nn // 3
        left = to_mask(vs[:third])
        right = to_mask(vs[nn - third:]) if third else 0
        middle = C & ~left & ~right
        limit = nn / tau
        small = [s.Z.bit_count() < limit for s in segs]

        # Case 1: a small segment meets the middle third
        for i, s in enumerate(segs):
            if small[i] and s.Z & middle:
                before = 0
                for t in segs[:i]:
                    before |= t.Z
                after = C & ~before & ~s.Z
                best, best_wit = -1, 0
                for J in ctx.all_independent_subsets(s.Z):
                    nj = ctx.nbhd(J)
                    lo, hi = before & ~nj, after & ~nj
                    if check and ctx.nbhd(lo) & hi:
                        raise StructureError("case 1 sides are adjacent")
                    a, wa = solve(lo, parent, f"case1 seg{i + 1}", ctx.weight(J))
                    b, wb = solve(hi, parent, f"case1 seg{i + 1}", 0)
                    val = a + b + ctx.weight(J)
                    if val > best:
                        best, best_wit = val, wa | wb | J
                return best, best_wit

        # Case 2: no small segment meets the middle
        l_idx = max((i for i, s in enumerate(segs) if small[i] and not s.Z & ~left), default=-1)
        r_idx = min((i for i, s in enumerate(segs) if small[i] and not s.Z & ~right),
                    default=len(segs))
        S = 0
        if l_idx >= 0:
            S |= segs[l_idx].Z
        if r_idx < len(segs):
            S |= segs[r_idx].Z
        # every roof vertex that can touch a middle segment sits in
        # Z_l..Z_r, so its closed neighbourhood joins S as well
        span = 0
        for s in segs[max(l_idx, 0):r_idx + 1]:
            span |= s.Z
        guard = dec.roof & span
        for s in segs[l_idx + 1:r_idx]:
            guard |= s.first | s.last
        S |= ctx.closed_nbhd(guard) & C
        flank_l = 0
        for s in segs[:max(l_idx, 0)]:
            flank_l |= s.Z
        flank_r = 0
        for s in segs[r_idx + 1:]:
            flank_r |= s.Z
        mid = 0
        for s in segs[l_idx + 1:r_idx]:
            mid |= s.Z
        flank_l &= ~S
        flank_r &= ~S
        mid &= ~S
        best, best_wit = -1, 0
        for J in ctx.all_independent_subsets(S):
            nj = ctx.nbhd(J)
            m2 = mid & ~nj
            try:
                lp, rp = two_coloring(adj, m2)
            except NotBipartite as exc:
                raise StructureError(f"case 2 middle is not bipartite: {exc}") from None
            stats.nodes += 1
            mv, mw = bipartite_mwis_mask(adj, ws, lp, rp)
            a, wa = solve(flank_l & ~nj, parent, "case2 left", ctx.weight(J))
            b, wb = solve(flank_r & ~nj, parent, "case2 right", 0)
            val = mv + a + b + ctx.weight(J)
            if val > best:
                best, best_wit = val, mw | wa | wb | J
        return best, best_wit

    return solve(mask, -1, "root", 0)


def solve_abbak(g: OrderedGraph, w: Optional[WeightMap] = None, k: int = 0, validate: bool = False,
                stats: Optional[SearchStats] = None, tau_override: Optional[int] = None) -> Solution:
    if validate:
        require_free(g, family_pattern("abbak", k), label=f"abbak({k})")
    ctx = Ctx(g, w, stats)
    val, wit = abbak_mask(ctx, g.full, k, tau_override)
    return ctx.solution(val, wit)
