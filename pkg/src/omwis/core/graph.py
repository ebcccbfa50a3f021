"""Ordered graphs, weights, patterns and solutions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .bits import iter_bits

Edge = Tuple[int, int]
Embedding = Tuple[int, ...]


class GraphError(ValueError):
    """Raised for structurally invalid graphs or weights."""


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> FrozenSet[Edge]:
    out = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if u > v:
            u, v = v, u
        if u < 1 or v > n:
            raise GraphError(f"edge {u}-{v} out of range 1..{n}")
        out.add((u, v))
    return frozenset(out)


@dataclass(frozen=True)
class OrderedGraph:
    """A graph on positions 1..n; the vertex order is the position order."""

    n: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @cached_property
    def adj(self) -> Tuple[int, ...]:
        """adj[v] is the neighbourhood of v as a bitmask (adj[0] == 0)."""
        a = [0] * (self.n + 1)
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def full(self) -> int:
        return ((1 << (self.n + 1)) - 1) & ~1

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_independent(self, vertices: Iterable[int]) -> bool:
        seen = 0
        for v in vertices:
            if self.adj[v] & seen:
                return False
            seen |= 1 << v
        return True

    def induced(self, positions: Iterable[int]) -> Tuple["OrderedGraph", Tuple[int, ...]]:
        """Induced subgraph on ``positions`` plus the map new position -> old."""
        keep = sorted(set(positions))
        index = {old: i + 1 for i, old in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return OrderedGraph(len(keep), frozenset(edges)), tuple([0] + keep)

    def literal(self) -> str:
        return f"{self.n}:" + ",".join(f"{u}-{v}" for u, v in self.sorted_edges())

    def __repr__(self) -> str:
        return f"OrderedGraph({self.literal()})"


@dataclass(frozen=True)
class Pattern(OrderedGraph):
    """A small ordered graph used as a forbidden pattern."""

    name: Optional[str] = None
    k: Optional[int] = None

    def __repr__(self) -> str:
        tag = f" {self.name}({self.k})" if self.name else ""
        return f"Pattern({self.literal()}{tag})"


def as_pattern(g: OrderedGraph, name: Optional[str] = None, k: Optional[int] = None) -> Pattern:
    return Pattern(g.n, g.edges, name, k)


@dataclass(frozen=True)
class WeightMap:
    """Positive rational weights w[1..n], with the common denominator ``scale``."""

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(x) for x in self.values)
        for i, x in enumerate(vals, start=1):
            if x <= 0:
                raise GraphError(f"nonpositive weight {x} at position {i}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def unit(cls, n: int) -> "WeightMap":
        return cls(tuple([Fraction(1)] * n))

    @property
    def n(self) -> int:
        return len(self.values)

    @cached_property
    def scale(self) -> int:
        s = 1
        for x in self.values:
            s = s * x.denominator // math.gcd(s, x.denominator)
        return s

    @cached_property
    def scaled(self) -> Tuple[int, ...]:
        """Integer weights scale*w(v), indexed by position (entry 0 unused)."""
        s = self.scale
        return (0,) + tuple(int(x * s) for x in self.values)

    def __getitem__(self, v: int) -> Fraction:
        return self.values[v - 1]

    def total(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.values[v - 1] for v in vertices), Fraction(0))

    def restrict(self, mapping: Sequence[int]) -> "WeightMap":
        """Weights for a subgraph whose position i was position mapping[i]."""
        return WeightMap(tuple(self.values[old - 1] for old in mapping[1:]))

    def reversed(self) -> "WeightMap":
        return WeightMap(tuple(reversed(self.values)))

    def is_unit(self) -> bool:
        return all(x == 1 for x in self.values)


def default_weights(g: OrderedGraph, w: Optional[WeightMap]) -> WeightMap:
    if w is None:
        return WeightMap.unit(g.n)
    if w.n != g.n:
        raise GraphError(f"weight map has {w.n} entries for {g.n} vertices")
    return w


@dataclass(frozen=True)
class Solution:
    weight: Fraction
    witness: FrozenSet[int]
    nodes: int = 0
    millis: float = 0.0

    def to_json(self) -> Dict[str, object]:
        return {
            "alpha": fraction_str(self.weight),
            "witness": sorted(self.witness),
            "nodes": self.nodes,
            "millis": round(self.millis, 3),
        }


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def mirror(g: OrderedGraph) -> OrderedGraph:
    n = g.n
    edges = frozenset((n + 1 - v, n + 1 - u) for u, v in g.edges)
    if isinstance(g, Pattern):
        return Pattern(n, edges, g.name, g.k)
    return OrderedGraph(n, edges)


def mirror_positions(n: int, positions: Iterable[int]) -> FrozenSet[int]:
    return frozenset(n + 1 - p for p in positions)


def check_solution(g: OrderedGraph, w: WeightMap, sol: Solution) -> None:
    if not g.is_independent(sol.witness):
        raise AssertionError(f"witness {sorted(sol.witness)} is not independent")
    if w.total(sol.witness) != sol.weight:
        raise AssertionError(f"witness weight {w.total(sol.witness)} != reported {sol.weight}")


@dataclass
class SearchStats:
    """Counts branch nodes; optionally records the branch tree for --trace."""

    nodes: int = 0
    trace: Optional[list] = field(default=None)

    def node(self, parent: int = -1, action: str = "", credit: object = 0) -> int:
        self.nodes += 1
        if self.trace is not None:
            self.trace.append(
                {"node": self.nodes, "parent": parent, "action": action, "credit": str(credit)}
            )
        return self.nodes


class ValidationError(ValueError):
    """The instance is not free of the pattern a solver relies on."""

    def __init__(self, message: str, embedding: Optional[Tuple[int, ...]] = None):
        super().__init__(message)
        self.embedding = embedding
