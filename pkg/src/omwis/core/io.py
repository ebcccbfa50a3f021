"""Text formats: graph files and pattern literals.

Graph file::

    n m
    [w_1 ... w_n]        optional; each weight is ``p`` or ``p/q``
    u-v                  m edges, any number per line
    # comments run to the end of the line
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .graph import GraphError, OrderedGraph, Pattern, WeightMap

_EDGE = re.compile(r"^(\d+)-(\d+)$")
_RATIONAL = re.compile(r"^\d+(/\d+)?$")


class ParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((no, body.split()))
    return out


def parse_graph(text: str) -> Tuple[OrderedGraph, WeightMap]:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "empty graph file")
    no, head = lines[0]
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise ParseError(no, "header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    rest = lines[1:]

    weights: Optional[List[Fraction]] = None
    if rest and all(_RATIONAL.match(t) for t in rest[0][1]) and not any("-" in t for t in rest[0][1]):
        no, toks = rest[0]
        if len(toks) != n:
            raise ParseError(no, f"expected {n} weights, got {len(toks)}")
        weights = []
        for t in toks:
            x = Fraction(t)
            if x <= 0:
                raise ParseError(no, f"nonpositive weight {t}")
            weights.append(x)
        rest = rest[1:]

    edges = []
    seen = set()
    for no, toks in rest:
        for t in toks:
            mt = _EDGE.match(t)
            if not mt:
                raise ParseError(no, f"malformed edge {t!r}")
            u, v = int(mt.group(1)), int(mt.group(2))
            if not 1 <= u < v <= n:
                raise ParseError(no, f"edge {u}-{v} out of range (need 1 <= u < v <= {n})")
            if (u, v) in seen:
                raise ParseError(no, f"duplicate edge {u}-{v}")
            seen.add((u, v))
            edges.append((u, v))
    if len(edges) != m:
        last = rest[-1][0] if rest else no
        raise ParseError(last, f"header announces {m} edges, found {len(edges)}")
    g = OrderedGraph(n, frozenset(edges))
    w = WeightMap(tuple(weights)) if weights is not None else WeightMap.unit(n)
    return g, w


def format_graph(g: OrderedGraph, w: Optional[WeightMap] = None) -> str:
    out = [f"{g.n} {g.m}"]
    if w is not None and not w.is_unit():
        out.append(" ".join(str(x) for x in w.values))
    out.extend(f"{u}-{v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def parse_pattern_literal(text: str) -> Pattern:
    """Parse ``"<n>:u-v,u-v"``; ``"<n>:"`` or ``"<n>"`` is an edgeless pattern."""
    s = text.strip().replace(" ", "")
    head, _, body = s.partition(":")
    if not head.isdigit():
        raise GraphError(f"bad pattern literal {text!r}")
    n = int(head)
    edges = []
    for tok in filter(None, body.split(",")):
        mt = _EDGE.match(tok)
        if not mt:
            raise GraphError(f"bad edge {tok!r} in pattern literal")
        edges.append((int(mt.group(1)), int(mt.group(2))))
    return Pattern(n, frozenset(edges))
