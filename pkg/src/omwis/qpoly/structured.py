"""aakbb(k)-free graphs via structured instances (X, Y, Z).

X and Z are independent, X < Y < Z, and |Y| is the measure.  One halving
step splits Y into halves, guesses the first k solution vertices in the
right half, then branches until one side of the split is edgeless and can be
absorbed into X or Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterator, List, Optional, Tuple

from ..classify import family_pattern
from ..core import OrderedGraph, SearchStats, Solution, WeightMap, require_free
from ..core.bipartite import bipartite_mwis_mask
from ..core.bits import above, bits, first_k, iter_bits, last, to_mask
from ..core.context import Ctx
from .seagull import aabb_mask


@dataclass(frozen=True)
class StructuredInstance:
    X: int
    Y: int
    Z: int

    @property
    def measure(self) -> int:
        return self.Y.bit_count()

    @property
    def vertices(self) -> int:
        return self.X | self.Y | self.Z

    @classmethod
    def of(cls, X=(), Y=(), Z=()) -> "StructuredInstance":
        return cls(to_mask(X), to_mask(Y), to_mask(Z))

    def sets(self) -> Tuple[List[int], List[int], List[int]]:
        return bits(self.X), bits(self.Y), bits(self.Z)


@dataclass(frozen=True)
class RefinedInstance:
    X: int
    YL: int
    YR: int
    Z: int


def check_structured(ctx: Ctx, inst: StructuredInstance) -> None:
    X, Y, Z = inst.X, inst.Y, inst.Z
    if X & Y or Y & Z or X & Z:
        raise AssertionError("X, Y, Z overlap")
    if not ctx.is_independent(X) or not ctx.is_independent(Z):
        raise AssertionError("X or Z not independent")
    if X and (Y | Z) and last(X) > (((Y | Z) & -(Y | Z)).bit_length() - 1):
        raise AssertionError("X does not precede Y and Z")
    if Z and Y and last(Y) > ((Z & -Z).bit_length() - 1):
        raise AssertionError("Y does not precede Z")


def _least_edge(adj, side: int) -> Tuple[int, int]:
    for u in iter_bits(side):
        right = (adj[u] & side) >> (u + 1) << (u + 1)
        if right:
            return u, (right & -right).bit_length() - 1
    raise ValueError("side has no edges")


def _halve(ctx: Ctx, inst: StructuredInstance, k: int
           ) -> Iterator[Tuple[StructuredInstance, int, int]]:
    """Yield (sub-instance, credit, chosen mask) triples."""
    adj, ws, stats = ctx.adj, ctx.ws, ctx.stats
    ys = bits(inst.Y)
    r = (len(ys) + 1) // 2
    YL = first_k(inst.Y, r)
    YR = inst.Y & ~YL

    def internal(X: int, YL: int, YR: int, Z: int, credit: int, chosen: int):
        stats.nodes += 1
        L, R = X | YL, YR | Z
        eL = ctx.edge_count(L)
        if eL == 0:
            yield StructuredInstance(X | YL, YR, Z), credit, chosen
            return
        eR = ctx.edge_count(R)
        if eR == 0:
            yield StructuredInstance(X, YL, YR | Z), credit, chosen
            return
        sparse, dense, e_dense = (R, L, eL) if eL >= eR else (L, R, eR)
        u, v = _least_edge(adj, sparse)
        best, best_cov = u, -1
        for x in (u, v):
            cov = e_dense - ctx.edge_count(dense & ~(adj[x] | (1 << x)))
            if cov > best_cov:
                best, best_cov = x, cov
        x = best
        drop = ~(1 << x)
        yield from internal(X & drop, YL & drop, YR & drop, Z & drop, credit, chosen)
        drop = ~(adj[x] | (1 << x))
        yield from internal(X & drop, YL & drop, YR & drop, Z & drop,
                            credit + ws[x], chosen | (1 << x))

    for I in ctx.independent_subsets(YR, k):
        NI = ctx.nbhd(I)
        X2, YL2, Z2 = inst.X & ~NI, YL & ~NI, inst.Z & ~NI
        if I.bit_count() < k:
            YR2 = 0
        else:
            YR2 = YR & above(last(I), ctx.g.n) & ~NI
        yield from internal(X2, YL2, YR2, Z2, ctx.weight(I), I)


def halve_workspace(g: OrderedGraph, w: Optional[WeightMap], inst: StructuredInstance, k: int
                    ) -> List[Tuple[StructuredInstance, Fraction, FrozenSet[int]]]:
    """All (sub-instance, credit, guessed vertices) of one halving step."""
    if inst.measure <= 1:
        raise ValueError("halving needs measure at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    ctx = Ctx(g, w)
    check_structured(ctx, inst)
    return [(sub, Fraction(c, ctx.w.scale), frozenset(iter_bits(ch)))
            for sub, c, ch in _halve(ctx, inst, k)]


def alpha_structured(ctx: Ctx, inst: StructuredInstance, k: int, parent: int = -1) -> Tuple[int, int]:
    adj, ws, stats = ctx.adj, ctx.ws, ctx.stats

    def solve(inst: StructuredInstance, parent: int, action: str, credit: int) -> Tuple[int, int]:
        me = stats.node(parent, action, credit)
        mu = inst.measure
        if mu == 0:
            return bipartite_mwis_mask(adj, ws, inst.X, inst.Z)
        if mu == 1:
            y = inst.Y.bit_length() - 1
            a, wa = solve(StructuredInstance(inst.X, 0, inst.Z), me, f"exclude {y}", 0)
            b, wb = solve(StructuredInstance(inst.X & ~adj[y], 0, inst.Z & ~adj[y]), me,
                          f"include {y}", ws[y])
            b += ws[y]
            return (b, wb | (1 << y)) if b >= a else (a, wa)
        best, best_wit = -1, 0
        for sub, credit2, chosen in _halve(ctx, inst, k):
            val, wit = solve(sub, me, "halve", credit2)
            val += credit2
            if val > best:
                best, best_wit = val, wit | chosen
        return best, best_wit

    return solve(inst, parent, "root", 0)


def solve_aakbb(g: OrderedGraph, w: Optional[WeightMap] = None, k: int = 1, validate: bool = False,
                stats: Optional[SearchStats] = None) -> Solution:
    if validate:
        require_free(g, family_pattern("aakbb", k), label=f"aakbb({k})")
    ctx = Ctx(g, w, stats)
    if k == 0:
        val, wit = aabb_mask(ctx, g.full)
    else:
        val, wit = alpha_structured(ctx, StructuredInstance(0, g.full, 0), k)
    return ctx.solution(val, wit)
