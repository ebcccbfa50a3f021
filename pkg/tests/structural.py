"""Checkers for the structural steps of the quasi-polynomial and
subexponential solvers.  Each returns a list of problems, empty on success,
so the same code drives the unit tests and the acceptance suite."""

import math

from omwis.classify import family_pattern
from omwis.core import alpha_brute
from omwis.core.bits import iter_bits, to_mask
from omwis.core.context import Ctx
from omwis.generate import random_free_graph
from omwis.qpoly.chains import Chain, chain_violations, refine_chain
from omwis.qpoly.structured import StructuredInstance, halve_workspace

def check_halving(g, w, inst, k):
    """(P1)-(P3) of one halving step; returns a list of problems."""
    problems = []
    ctx = Ctx(g, w)
    mu = inst.measure
    outs = halve_workspace(g, w, inst, k)
    best = None
    for sub, credit, chosen in outs:
        V = sub.vertices
        if V & ~inst.vertices:
            problems.append("new vertices")
        if inst.X & V & ~sub.X or inst.Z & V & ~sub.Z:
            problems.append("X or Z vertex moved")
        if not ctx.is_independent(sub.X) or not ctx.is_independent(sub.Z):
            problems.append("flank not independent")
        if sub.measure > math.ceil(mu / 2):
            problems.append(f"measure {sub.measure} > ceil({mu}/2)")
        cm = to_mask(chosen)
        if cm & V or not ctx.is_independent(cm) or ctx.nbhd(cm) & V:
            problems.append("guessed set not separated")
        if credit != ctx.w.total(chosen) or credit < 0:
            problems.append("credit is not the guessed weight")
        val = alpha_brute(g, w, within=V).weight + credit
        best = val if best is None else max(best, val)
    if best != alpha_brute(g, w, within=inst.vertices).weight:
        problems.append("max(alpha + credit) differs from the oracle")
    return problems


def random_structured(rng, n, k):
    g = random_free_graph(rng, n, family_pattern("aakbb", k), float(rng.random()))
    a = int(rng.integers(0, n // 3 + 1))
    b = int(rng.integers(0, n // 3 + 1))
    X = [v for v in range(1, a + 1)]
    Z = [v for v in range(n - b + 1, n + 1)]
    X = [v for v in X if not any(g.has_edge(u, v) for u in X if u < v)]
    Z = [v for v in Z if not any(g.has_edge(u, v) for u in Z if u < v)]
    Y = [v for v in range(a + 1, n - b + 1)]
    return g, StructuredInstance.of(X, Y, Z)


def chain_alpha(g, w, chain):
    return alpha_brute(g, w, within=chain.vertices).weight


def is_refinement(old, new, j):
    r = len(old.links)
    if len(new.links) != r + 1:
        return False
    for i in range(r):
        if i < j - 1 and new.links[i] & ~old.links[i]:
            return False
        if i > j - 1 and new.links[i + 1] & ~old.links[i]:
            return False
    return not (new.links[j - 1] | new.links[j]) & ~old.links[j - 1]


def check_refinement(g, w, chain, j, k):
    problems = []
    ctx = Ctx(g, w)
    best = None
    for new, credit, chosen in refine_chain(g, w, chain, j, k):
        if chain_violations(ctx.adj, new.links):
            problems.append("edge-locality")
        if not is_refinement(chain, new, j):
            problems.append("not a refinement at j")
        cm = to_mask(chosen)
        if cm & new.vertices or ctx.nbhd(cm) & new.vertices or credit != ctx.w.total(chosen):
            problems.append("guess not separated")
        val = chain_alpha(g, w, new) + credit
        best = val if best is None else max(best, val)
    if best != chain_alpha(g, w, chain):
        problems.append("max(alpha + credit) differs from the oracle")
    return problems


def random_chain(rng, n, k):
    g = random_free_graph(rng, n, family_pattern("ababk", k), float(rng.random()))
    cuts = sorted(int(x) for x in rng.integers(0, n + 1, size=2))
    links = [list(range(1, cuts[0] + 1)), list(range(cuts[0] + 1, cuts[1] + 1)),
             list(range(cuts[1] + 1, n + 1))]
    ch = Chain.of(links, ["A", "B", "C"])
    return g, ch


def segment_problems(g, dec, k):
    """(P1)-(P5), the consecutive-segments consequence and the guard rules."""
    problems = []
    segs = dec.segments
    seen = set()
    owner = {}
    for i, s in enumerate(segs):
        Z = set(iter_bits(s.Z))
        seen |= Z
        if seen != set(range(1, max(seen) + 1)):
            problems.append(f"P1: Z<={i + 1} is not a prefix")
        if not g.has_edge(s.x, s.y):
            problems.append(f"P2: x{i + 1}y{i + 1} is not an edge")
        if s.y not in Z or not all(s.x <= z <= s.y for z in Z):
            problems.append(f"P3 fails for segment {i + 1}")
        for z in Z:
            owner[z] = i
    if seen != set(g.vertices):
        problems.append("P5: segments do not cover V")
    if sum(s.Z.bit_count() for s in segs) != g.n:
        problems.append("P5: segments overlap")
    done = set()
    for i, s in enumerate(segs):
        done |= set(iter_bits(s.Z))
        for v in done:
            leaves = any(u not in done for u in g.neighbors(v))
            if leaves and v not in set(iter_bits(s.Z)):
                problems.append(f"P4: {v} leaves Z<={i + 1} from outside Z{i + 1}")
    for u, v in g.edges:
        i, j = sorted((owner[u], owner[v]))
        if j > i + 1:
            problems.append(f"star: edge {u}-{v} joins segments {i + 1} and {j + 1}")
    roof = set()
    for s in segs:
        roof |= {s.x, s.y}
    for s in segs:
        guards = set(iter_bits(s.first | s.last))
        if s.first.bit_count() > k or s.last.bit_count() > k:
            problems.append("guard set larger than k")
        if not g.is_independent(guards):
            problems.append("guards not independent")
        if any(g.has_edge(a, b) or a == b for a in guards for b in roof):
            problems.append("guard touches the roof")
        if not guards <= set(iter_bits(s.Z)):
            problems.append("guard outside its segment")
    return problems
