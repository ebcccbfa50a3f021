"""Trains, permutation gadgets and the coupled reduction.

A train is an ordered graph with an independent prefix of inputs and an
independent suffix of outputs.  Coupling glues the outputs of one train onto
the inputs of the next.  A permutation gadget is a train that behaves, as far
as alpha is concerned, like disjoint paths from input i to output sigma(i)
with kvec[i] vertices each.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..core import OrderedGraph
from .base import ReductionOutput
from .exact import mis_size

TARGETS = ("abxba", "abccab")


class TrainError(ValueError):
    pass


@dataclass(frozen=True)
class Train:
    graph: OrderedGraph
    inputs: Tuple[int, ...]
    outputs: Tuple[int, ...]

    def __post_init__(self):
        g = self.graph
        ins, outs = tuple(self.inputs), tuple(self.outputs)
        object.__setattr__(self, "inputs", ins)
        object.__setattr__(self, "outputs", outs)
        if len(set(ins + outs)) != len(ins) + len(outs):
            raise TrainError("input and output vertices must be pairwise distinct")
        if ins != tuple(range(1, len(ins) + 1)):
            raise TrainError("inputs must be a prefix, in order")
        if outs != tuple(range(g.n - len(outs) + 1, g.n + 1)):
            raise TrainError("outputs must be a suffix, in order")
        if not g.is_independent(ins) or not g.is_independent(outs):
            raise TrainError("inputs and outputs must be independent sets")


def couple_trains(t1: Train, t2: Train) -> Train:
    """Identify the i-th output of ``t1`` with the i-th input of ``t2``."""
    if len(t1.outputs) != len(t2.inputs):
        raise TrainError(f"arity mismatch: {len(t1.outputs)} outputs vs {len(t2.inputs)} inputs")
    n1 = t1.graph.n
    shared = len(t2.inputs)

    def lift(p: int) -> int:
        return t1.outputs[p - 1] if p <= shared else n1 + p - shared

    edges = set(t1.graph.edges)
    edges |= {(lift(u), lift(v)) for u, v in t2.graph.edges}
    n = n1 + t2.graph.n - shared
    outs = tuple(lift(p) for p in t2.outputs)
    return Train(OrderedGraph(n, frozenset(edges)), t1.inputs, outs)


@dataclass(frozen=True)
class PermutationGadget:
    """``sigma[i-1]`` is the output slot reached from input i (1-based)."""

    train: Train
    sigma: Tuple[int, ...]
    kvec: Tuple[int, ...]

    def __post_init__(self):
        ell = len(self.train.inputs)
        if len(self.train.outputs) != ell or len(self.sigma) != ell or len(self.kvec) != ell:
            raise TrainError("gadget arity mismatch")
        if sorted(self.sigma) != list(range(1, ell + 1)):
            raise TrainError("sigma is not a permutation")
        if any(k < 1 for k in self.kvec) or len({k % 2 for k in self.kvec}) > 1:
            raise TrainError("kvec entries must be positive and of equal parity")

    @property
    def ell(self) -> int:
        return len(self.sigma)


def _build(order: List[object], edges: List[Tuple[object, object]]) -> Tuple[OrderedGraph, Dict]:
    pos = {v: i + 1 for i, v in enumerate(order)}
    return OrderedGraph(len(order), frozenset((pos[a], pos[b]) for a, b in edges)), pos


def swap_gadget(target: str, ell: int, j: int) -> PermutationGadget:
    """Gadget for the elementary swap of slots j and j+1."""
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    if not 1 <= j <= ell - 1:
        raise TrainError(f"swap index j={j} out of range 1..{ell - 1}")
    X = lambda level, i: ("x", level, i)  # noqa: E731
    others = [i for i in range(1, ell + 1)]
    swapped = others[:j - 1] + [j + 1, j] + others[j + 1:]
    edges: List[Tuple[object, object]] = []
    if target == "abxba":
        v0 = [X(0, i) for i in others]
        v1 = [X(1, i) for i in range(1, j)] + ["u", "v"] + [X(1, i) for i in range(j, ell + 1)]
        v2 = [X(2, i) for i in range(1, j)] + ["w"] + [X(2, i) for i in swapped[j - 1:]]
        v3 = [X(3, i) for i in swapped]
        for i in others:
            if i == j + 1:
                path = [X(0, i), X(1, i), "u", "w", X(2, i), X(3, i)]
            else:
                path = [X(0, i), X(1, i), X(2, i), X(3, i)]
            edges += list(zip(path, path[1:]))
        edges += [("v", X(0, j)), ("v", "u"), ("v", X(1, j)), ("v", X(2, j))]
        edges.append((X(1, j), X(1, j + 1)))
        kvec = tuple(6 if i == j + 1 else 4 for i in others)
        order = v0 + v1 + v2 + v3
    else:
        v0 = [X(0, i) for i in others]
        v1 = ["u1", "u2", "u3", "u4"]
        rev = list(range(ell, 0, -1))
        a, b = rev.index(j + 1), rev.index(j)
        rev[a], rev[b] = rev[b], rev[a]
        v2 = [X(2, i) for i in rev]
        v3 = [X(3, i) for i in swapped]
        for i in others:
            if i == j:
                path = [X(0, i), "u1", "u3", X(2, i), X(3, i)]
            elif i == j + 1:
                path = [X(0, i), "u2", "u4", X(2, i), X(3, i)]
            else:
                path = [X(0, i), X(2, i), X(3, i)]
            edges += list(zip(path, path[1:]))
        kvec = tuple(5 if i in (j, j + 1) else 3 for i in others)
        order = v0 + v1 + v2 + v3
    g, pos = _build(order, edges)
    train = Train(g, tuple(pos[x] for x in v0), tuple(pos[x] for x in v3))
    sigma = tuple(swapped.index(i) + 1 for i in others)
    return PermutationGadget(train, sigma, kvec)


def identity_gadget(ell: int) -> PermutationGadget:
    """Plain matching x_i - y_i: sigma = id, every path has two vertices."""
    g = OrderedGraph(2 * ell, frozenset((i, ell + i) for i in range(1, ell + 1)))
    train = Train(g, tuple(range(1, ell + 1)), tuple(range(ell + 1, 2 * ell + 1)))
    return PermutationGadget(train, tuple(range(1, ell + 1)), (2,) * ell)


def compose_gadgets(g1: PermutationGadget, g2: PermutationGadget) -> PermutationGadget:
    """Gadget for sigma2 after sigma1, by coupling."""
    if g1.ell != g2.ell:
        raise TrainError(f"arity mismatch: {g1.ell} vs {g2.ell}")
    train = couple_trains(g1.train, g2.train)
    sigma = tuple(g2.sigma[s - 1] for s in g1.sigma)
    kvec = tuple(k + g2.kvec[s - 1] - 1 for k, s in zip(g1.kvec, g1.sigma))
    assert len({k % 2 for k in kvec}) <= 1, "kvec parity must stay uniform"
    return PermutationGadget(train, sigma, kvec)


def bubble_swaps(sigma: Sequence[int]) -> List[int]:
    """Adjacent transpositions (slot j swaps with j+1) whose successive
    application sends the token starting in slot i to slot sigma[i-1]."""
    arr = list(range(1, len(sigma) + 1))  # arr[p] = token sitting in slot p+1
    swaps = []
    changed = True
    while changed:
        changed = False
        for p in range(len(arr) - 1):
            if sigma[arr[p] - 1] > sigma[arr[p + 1] - 1]:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
                swaps.append(p + 1)
                changed = True
    return swaps


def gadget_for(target: str, sigma: Sequence[int]) -> Optional[PermutationGadget]:
    """Composition of swap gadgets realising ``sigma``; None for the identity."""
    gadget = None
    for j in bubble_swaps(sigma):
        s = swap_gadget(target, len(sigma), j)
        gadget = s if gadget is None else compose_gadgets(gadget, s)
    return gadget


def locomotive(g: OrderedGraph) -> Tuple[Train, List[Tuple[int, int]]]:
    """V(G) followed by one private neighbour v_e per (vertex, incident edge).

    Returns the train and, per output slot, the (vertex, edge index) pair.
    """
    edges = g.sorted_edges()
    slots = sorted((v, t) for t, e in enumerate(edges) for v in e)
    n = g.n
    es = [(v, n + i + 1) for i, (v, _) in enumerate(slots)]
    graph = OrderedGraph(n + len(slots), frozenset(es))
    return Train(graph, (), tuple(range(n + 1, n + len(slots) + 1))), slots


def caboose(target: str, m: int) -> Train:
    """Inputs y_1..y_2m, then z_1..z_2m with z_{2t-1} z_{2t} edges."""
    ell = 2 * m
    y = lambda i: i  # noqa: E731
    z = lambda i: ell + i  # noqa: E731
    edges = [(z(2 * t - 1), z(2 * t)) for t in range(1, m + 1)]
    if target == "abxba":
        edges += [(y(i), z(i)) for i in range(1, ell + 1)]
    else:
        edges += [(y(i), z(ell + 1 - i)) for i in range(1, ell + 1)]
    return Train(OrderedGraph(2 * ell, frozenset(edges)), tuple(range(1, ell + 1)), ())


def gen_train_reduction(g: OrderedGraph, k: int, target: str) -> ReductionOutput:
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    m = g.m
    if m < 1:
        raise ValueError("the train reduction needs at least one edge")
    loco, slots = locomotive(g)
    # edge number t (lexicographic) takes slots 2t-1 (smaller end) and 2t
    sigma = tuple(2 * t + (1 if v == g.sorted_edges()[t][0] else 2) for v, t in slots)
    gadget = gadget_for(target, sigma)
    if gadget is None:
        # identity: outputs of the locomotive feed the caboose directly,
        # which is a gadget whose paths are single vertices
        kvec = (1,) * (2 * m)
        front = loco
        swaps = 0
    else:
        kvec = gadget.kvec
        front = couple_trains(loco, gadget.train)
        swaps = len(bubble_swaps(sigma))
    full = couple_trains(front, caboose(target, m))
    by_edge: Dict[int, List[int]] = {}
    for i, (_, t) in enumerate(slots):
        by_edge.setdefault(t, []).append(i)
    ke = []
    for t in range(m):
        i, jj = by_edge[t]
        ke.append((kvec[i] + kvec[jj] + 2) // 2)
    offset = sum(ke)
    prov = {"target": target, "sigma": list(sigma), "kvec": list(kvec), "swaps": swaps,
            "k_e": ke}
    return ReductionOutput(full.graph, k + offset, f"train-{target}", offset, prov)


# ---------------------------------------------------------------------------
# interchangeability


@dataclass(frozen=True)
class Boundaried:
    """Unordered graph on hashable vertices with a boundary set."""

    vertices: Tuple[object, ...]
    edges: Tuple[Tuple[object, object], ...]
    boundary: Tuple[object, ...]


def braiding_pair() -> Tuple[Boundaried, Boundaried]:
    b = ("a", "c", "d", "g")
    g1 = Boundaried(("a", "b1", "c", "d", "e1", "f1", "g"),
                    (("a", "b1"), ("b1", "c"), ("d", "e1"), ("e1", "f1"), ("f1", "g")), b)
    g2 = Boundaried(("a", "b2", "b2'", "c", "d", "e2", "f2", "g"),
                    (("a", "b2"), ("b2", "c"), ("a", "b2'"), ("b2'", "c"), ("b2", "b2'"),
                     ("d", "e2"), ("e2", "f2"), ("f2", "g"), ("b2", "e2"), ("b2'", "f2")), b)
    return g1, g2


def gadget_boundaried(gadget: PermutationGadget) -> Tuple[Boundaried, Boundaried]:
    """The gadget and the linear forest it should be interchangeable with.

    Boundary vertex names: ("x", i) for input i, ("y", i) for output i.
    """
    t = gadget.train
    name: Dict[int, object] = {}
    for i, p in enumerate(t.inputs, 1):
        name[p] = ("x", i)
    for i, p in enumerate(t.outputs, 1):
        name[p] = ("y", i)
    for p in t.graph.vertices:
        name.setdefault(p, ("in", p))
    boundary = tuple(name[p] for p in t.inputs + t.outputs)
    pg = Boundaried(tuple(name[p] for p in t.graph.vertices),
                    tuple((name[u], name[v]) for u, v in t.graph.sorted_edges()), boundary)
    verts: List[object] = list(boundary)
    edges: List[Tuple[object, object]] = []
    for i, (s, kk) in enumerate(zip(gadget.sigma, gadget.kvec), 1):
        if kk < 2:
            raise TrainError("a path joining two boundary vertices needs at least two vertices")
        inner = [("L", i, r) for r in range(kk - 2)]
        verts += inner
        path = [("x", i)] + inner + [("y", s)]
        edges += list(zip(path, path[1:]))
    return pg, Boundaried(tuple(verts), tuple(edges), boundary)


def _alpha_with_host(part: Boundaried, host_n: int, host_edges: Set[Tuple[int, int]],
                     attach: Set[Tuple[int, object]]) -> int:
    idx: Dict[object, int] = {}
    for v in part.vertices:
        idx[("p", v)] = len(idx) + 1
    for h in range(host_n):
        idx[("h", h)] = len(idx) + 1
    es = {(idx[("p", a)], idx[("p", b)]) for a, b in part.edges}
    es |= {(idx[("h", a)], idx[("h", b)]) for a, b in host_edges}
    es |= {(idx[("h", h)], idx[("p", b)]) for h, b in attach}
    return mis_size(OrderedGraph(len(idx), frozenset(es)))


def interchange_trial(p1: Boundaried, p2: Boundaried, rng: np.random.Generator,
                      max_host: int = 10) -> Tuple[int, int]:
    """alpha of one random host around ``p1`` and around ``p2``."""
    if set(p1.boundary) != set(p2.boundary):
        raise ValueError("boundaries differ")
    host_n = int(rng.integers(0, max_host + 1))
    p = float(rng.random())
    host_edges = {(a, b) for a in range(host_n) for b in range(a + 1, host_n) if rng.random() < p}
    q = float(rng.random())
    attach = {(h, b) for h in range(host_n) for b in p1.boundary if rng.random() < q}
    return (_alpha_with_host(p1, host_n, host_edges, attach),
            _alpha_with_host(p2, host_n, host_edges, attach))


def check_interchangeable(p1: Boundaried, p2: Boundaried, rng: np.random.Generator,
                          trials: int = 200, max_host: int = 10) -> List[Tuple[int, int]]:
    """Failing (alpha1, alpha2) pairs over random hosts; empty means pass."""
    bad = []
    for _ in range(trials):
        a, b = interchange_trial(p1, p2, rng, max_host)
        if a != b:
            bad.append((a, b))
    return bad
