"""Pattern-aware front door.

Isolated positions at the ends of H are peeled off by guessing the first
and last vertex of an optimum solution; the remaining core of H picks the
specialised solver.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from .classify import TIERS, is_parametric, smallest_gap, strip_isolated_ends
from .core import OrderedGraph, Pattern, SearchStats, Solution, WeightMap, require_free
from .core.bits import above, below, interval, iter_bits
from .core.context import Ctx
from .poly import solve_chordfree, solve_oneedgek, solve_p3free
from .qpoly.chains import ababk_mask
from .qpoly.seagull import aabb_mask
from .qpoly.structured import StructuredInstance, alpha_structured
from .subexp import abbak_mask


class HardPatternWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Route:
    """How an H-free instance gets solved."""

    family: Optional[str]  # None: generic branch and bound
    k: Optional[int]
    lead: int
    trail: int
    core: Pattern

    def describe(self) -> str:
        name = "generic" if self.family is None else self.family
        if self.k is not None:
            name += f"({self.k})"
        return f"pacman x{max(self.lead, self.trail)} -> {name}"


def route_for(h: OrderedGraph) -> Route:
    core, lead, trail = strip_isolated_ends(h)
    if core.n == 0:
        # edgeless (or empty) pattern: H-free graphs have fewer than |H| vertices
        return Route(None, None, 0, 0, core)
    for _, fams in TIERS:
        for fam in fams:
            k = smallest_gap(core, fam)
            if k is not None:
                return Route(fam, k if is_parametric(fam) else None, lead, trail, core)
    return Route(None, None, 0, 0, core)


def _pacman_branches(ctx: Ctx, mask: int, lead: bool, trail: bool
                     ) -> List[Tuple[int, int, int]]:
    """(sub-mask, credit, chosen) for one peeling layer."""
    adj, ws = ctx.adj, ctx.ws
    n = ctx.g.n
    out = [(0, 0, 0)]
    vs = list(iter_bits(mask))
    if lead and trail:
        for i, x in enumerate(vs):
            out.append((0, ws[x], 1 << x))
            for y in vs[i + 1:]:
                if adj[x] >> y & 1:
                    continue
                sub = mask & interval(x + 1, y - 1) & ~adj[x] & ~adj[y]
                out.append((sub, ws[x] + ws[y], (1 << x) | (1 << y)))
    elif lead:
        for x in vs:
            out.append((mask & above(x, n) & ~adj[x], ws[x], 1 << x))
    elif trail:
        for y in vs:
            out.append((mask & below(y) & ~adj[y], ws[y], 1 << y))
    else:
        raise ValueError("pattern has no isolated end to peel")
    return out


def pacman_reduce(g: OrderedGraph, w: Optional[WeightMap], h: OrderedGraph
                  ) -> Tuple[Pattern, List[Tuple[FrozenSet[int], Fraction, FrozenSet[int]]]]:
    """One peeling layer: the inner pattern and the branches
    (remaining vertices, credit, guessed vertices)."""
    lead = h.n > 0 and h.degree(1) == 0
    trail = h.n > 0 and h.degree(h.n) == 0
    if not (lead or trail):
        raise ValueError("pattern has no isolated end to peel")
    ctx = Ctx(g, w)
    lo = 1 if lead else 0
    hi = h.n - 1 if (trail and h.n > 1) else h.n
    inner = Pattern(hi - lo, frozenset((u - lo, v - lo) for u, v in h.edges))
    branches = [(frozenset(iter_bits(s)), Fraction(c, ctx.w.scale), frozenset(iter_bits(ch)))
                for s, c, ch in _pacman_branches(ctx, g.full, lead, trail)]
    return inner, branches


def _on_subgraph(ctx: Ctx, mask: int, solver) -> Tuple[int, int]:
    sub, mapping = ctx.g.induced(iter_bits(mask))
    sol = solver(sub, ctx.w.restrict(mapping))
    scale = ctx.w.scale
    val = sol.weight * scale
    assert val.denominator == 1
    wit = 0
    for p in sol.witness:
        wit |= 1 << mapping[p]
    ctx.stats.nodes += sol.nodes
    return int(val), wit


def _run_family(ctx: Ctx, mask: int, family: Optional[str], k: Optional[int],
                tau: Optional[int]) -> Tuple[int, int]:
    if not mask:
        return 0, 0
    if family is None:
        return generic_mask(ctx, mask)
    if family == "p3":
        return _on_subgraph(ctx, mask, solve_p3free)
    if family == "chord":
        return _on_subgraph(ctx, mask, solve_chordfree)
    if family == "chordrev":
        return _on_subgraph(ctx, mask, lambda g, w: solve_chordfree(g, w, "mirrored"))
    if family == "oneedge":
        return _on_subgraph(ctx, mask, lambda g, w: solve_oneedgek(g, w, k))
    if family == "aakbb":
        if k == 0:
            return aabb_mask(ctx, mask)
        return alpha_structured(ctx, StructuredInstance(0, mask, 0), k)
    if family == "ababk":
        return ababk_mask(ctx, mask, k)
    if family == "abbak":
        return abbak_mask(ctx, mask, k, tau)
    raise ValueError(f"no solver for family {family!r}")


def solve_auto(g: OrderedGraph, w: Optional[WeightMap], h: OrderedGraph, validate: bool = False,
               stats: Optional[SearchStats] = None, tau_override: Optional[int] = None) -> Solution:
    if validate:
        require_free(g, h, label=h.literal())
    ctx = Ctx(g, w, stats)
    route = route_for(h)
    if route.family is None and route.core.n > 0:
        warnings.warn(f"pattern {h.literal()} is in the NP-hard class; using branch and bound",
                      HardPatternWarning, stacklevel=2)

    def peel(mask: int, lead: int, trail: int) -> Tuple[int, int]:
        if lead == 0 and trail == 0:
            return _run_family(ctx, mask, route.family, route.k, tau_override)
        ctx.stats.nodes += 1
        best, best_wit = -1, 0
        for sub, credit, chosen in _pacman_branches(ctx, mask, lead > 0, trail > 0):
            val, wit = peel(sub, max(lead - 1, 0), max(trail - 1, 0))
            if val + credit > best:
                best, best_wit = val + credit, wit | chosen
        return best, best_wit

    val, wit = peel(g.full, route.lead, route.trail)
    return ctx.solution(val, wit)


def generic_mask(ctx: Ctx, mask: int) -> Tuple[int, int]:
    adj, ws, stats = ctx.adj, ctx.ws, ctx.stats
    best = [0, 0]

    def rec(s: int, val: int, chosen: int) -> None:
        stats.nodes += 1
        if val + ctx.weight(s) <= best[0]:
            if not s and val > best[0]:
                best[0], best[1] = val, chosen
            return
        v, d = 0, -1
        for u in iter_bits(s):
            du = (adj[u] & s).bit_count()
            if du > d:
                v, d = u, du
        if d <= 0:
            val += ctx.weight(s)
            if val > best[0]:
                best[0], best[1] = val, chosen | s
            return
        rec(s & ~(adj[v] | (1 << v)), val + ws[v], chosen | (1 << v))
        rec(s & ~(1 << v), val, chosen)

    rec(mask, 0, 0)
    return best[0], best[1]


def solve_generic(g: OrderedGraph, w: Optional[WeightMap] = None,
                  stats: Optional[SearchStats] = None) -> Solution:
    """Exact branch and bound on a maximum-degree vertex."""
    ctx = Ctx(g, w, stats)
    val, wit = generic_mask(ctx, g.full)
    return ctx.solution(val, wit)
