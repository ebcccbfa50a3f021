"""Complexity classification of a forbidden ordered pattern.

Catalog families (``(k)`` is a run of k isolated positions)::

    p3          3:1-2,2-3
    chord       3:1-2,1-3
    chordrev    3:1-3,2-3
    oneedge(k)  a (k) a
    aakbb(k)    a a (k) b b
    ababk(k)    a (k) b (k) a (k) b
    abbak(k)    a (k) b b (k) a
    abkab(k)    a b (k) a b
    akbab(k)    a (k) b a b

``ext(P, k)`` pads P with k isolated positions on both sides.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .core import OrderedGraph, Pattern, find_pattern, parse_pattern_literal
from .core.graph import GraphError

POLYNOMIAL = "Polynomial"
QUASIPOLYNOMIAL = "Quasipolynomial"
SUBEXPONENTIAL = "Subexponential"
NPHARD = "NPHard"
ORDER = {POLYNOMIAL: 0, QUASIPOLYNOMIAL: 1, SUBEXPONENTIAL: 2, NPHARD: 3}


_FAMILIES = {
    "p3": (False, lambda k: (3, [(1, 2), (2, 3)])),
    "chord": (False, lambda k: (3, [(1, 2), (1, 3)])),
    "chordrev": (False, lambda k: (3, [(1, 3), (2, 3)])),
    "oneedge": (True, lambda k: (k + 2, [(1, k + 2)])),
    "aakbb": (True, lambda k: (k + 4, [(1, 2), (k + 3, k + 4)])),
    "ababk": (True, lambda k: (3 * k + 4, [(1, 2 * k + 3), (k + 2, 3 * k + 4)])),
    "abbak": (True, lambda k: (2 * k + 4, [(1, 2 * k + 4), (k + 2, k + 3)])),
    "abkab": (True, lambda k: (k + 4, [(1, k + 3), (2, k + 4)])),
    "akbab": (True, lambda k: (k + 4, [(1, k + 3), (k + 2, k + 4)])),
}

# Named fixed patterns used across the package.
NAMED = {
    "aabb": "4:1-2,3-4",
    "abab": "4:1-3,2-4",
    "abba": "4:1-4,2-3",
    "abxba": "5:1-5,2-4",
    "abccab": "6:1-5,2-6,3-4",
    "abcabc": "6:1-4,2-5,3-6",
    "aabbcc": "6:1-2,3-4,5-6",
    "abbcca": "6:1-6,2-3,4-5",
    "abxxba": "6:1-6,2-5",
    "abcbca": "6:1-6,2-4,3-5",
    "bad": "4:1-2,1-4",
    "badc": "4:1-2,1-4,3-4",
}

TIERS: List[Tuple[str, List[str]]] = [
    (POLYNOMIAL, ["p3", "chord", "chordrev", "oneedge"]),
    (QUASIPOLYNOMIAL, ["aakbb", "ababk"]),
    (SUBEXPONENTIAL, ["abbak"]),
]


def family_names() -> List[str]:
    return list(_FAMILIES)


def is_parametric(name: str) -> bool:
    return _FAMILIES[name][0]


def ext(p: OrderedGraph, k: int) -> Pattern:
    edges = frozenset((u + k, v + k) for u, v in p.edges)
    name = getattr(p, "name", None)
    return Pattern(p.n + 2 * k, edges, f"ext {name}" if name else None, k)


@lru_cache(maxsize=None)
def family_pattern(name: str, k: int = 0) -> Pattern:
    """Catalog pattern; ``"ext F"`` gives ext(F(k), k)."""
    if k < 0:
        raise GraphError("gap parameter must be nonnegative")
    if name.startswith("ext "):
        inner = family_pattern(name[4:].strip(), k)
        out = ext(inner, k)
        return Pattern(out.n, out.edges, name, k)
    if name not in _FAMILIES:
        raise GraphError(f"unknown family {name!r}")
    param, build = _FAMILIES[name]
    n, edges = build(k)
    return Pattern(n, frozenset(edges), name, k if param else None)


_FAMILY_CALL = re.compile(r"^\s*(ext\s+)?([a-z0-9]+)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def resolve_pattern(text: str) -> Pattern:
    """A pattern literal, a named pattern, or ``family(k)`` / ``ext family(k)``."""
    s = text.strip()
    if s[:1].isdigit():
        return parse_pattern_literal(s)
    mt = _FAMILY_CALL.match(s)
    if not mt:
        raise GraphError(f"cannot read pattern {text!r}")
    prefix, name, k = mt.group(1), mt.group(2), mt.group(3)
    if name in NAMED and not prefix and k is None:
        p = parse_pattern_literal(NAMED[name])
        return Pattern(p.n, p.edges, name, None)
    if name in _FAMILIES:
        return family_pattern(("ext " if prefix else "") + name, int(k or 0))
    if name in NAMED and prefix:
        p = parse_pattern_literal(NAMED[name])
        out = ext(Pattern(p.n, p.edges, name), int(k or 0))
        return out
    raise GraphError(f"unknown pattern {text!r}")


@dataclass(frozen=True)
class ComplexityClass:
    cls: str
    family: Optional[str] = None
    k: Optional[int] = None
    degenerate: bool = False

    def to_json(self) -> Dict[str, object]:
        out: Dict[str, object] = {"class": self.cls, "family": self.family, "k": self.k}
        if self.degenerate:
            out["degenerate"] = True
        return out

    def __le__(self, other: "ComplexityClass") -> bool:
        return ORDER[self.cls] <= ORDER[other.cls]


def strip_isolated_ends(h: OrderedGraph) -> Tuple[Pattern, int, int]:
    """Core of ``h`` without leading/trailing isolated positions, and the
    number of positions removed on each side."""
    deg = [h.degree(v) for v in range(1, h.n + 1)]
    lead = 0
    while lead < h.n and deg[lead] == 0:
        lead += 1
    if lead == h.n:
        return Pattern(0, frozenset()), h.n, 0
    trail = 0
    while deg[h.n - 1 - trail] == 0:
        trail += 1
    core = Pattern(h.n - lead - trail, frozenset((u - lead, v - lead) for u, v in h.edges))
    return core, lead, trail


def _contained(h: OrderedGraph, host: OrderedGraph) -> bool:
    return h.n <= host.n and find_pattern(host, h, "induced") is not None


def smallest_gap(core: OrderedGraph, family: str) -> Optional[int]:
    """Least k with ``core`` an induced ordered subgraph of family(k).

    A core has no isolated ends, so its first and last vertex land on
    non-isolated positions of ext(family(k), K); hence the padding is never
    needed and it suffices to test family(k) itself for k <= |V(core)|.
    """
    top = core.n if is_parametric(family) else 0
    for k in range(top + 1):
        if _contained(core, family_pattern(family, k)):
            return k
    return None


@lru_cache(maxsize=4096)
def _classify_literal(lit: str) -> ComplexityClass:
    h = parse_pattern_literal(lit)
    kk = h.n
    if kk <= 1:
        return ComplexityClass(POLYNOMIAL, None, None, degenerate=True)
    core, _, _ = strip_isolated_ends(h)
    for cls, fams in TIERS:
        for fam in fams:
            if _contained(h, family_pattern("ext " + fam, kk)):
                k = smallest_gap(core, fam) if core.n else 0
                return ComplexityClass(cls, fam, k if is_parametric(fam) else None)
    return ComplexityClass(NPHARD)


def classify(h: OrderedGraph) -> ComplexityClass:
    return _classify_literal(h.literal())


def all_patterns(max_n: int):
    """Every ordered pattern with at most ``max_n`` vertices."""
    for n in range(max_n + 1):
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        for code in range(1 << len(pairs)):
            yield Pattern(n, frozenset(p for i, p in enumerate(pairs) if code >> i & 1))
