"""3-CNF formulas and the literal/occurrence reduction to ordered MIS."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..core import OrderedGraph
from .base import ReductionOutput

Clause = Tuple[int, int, int]


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """Variables 1..n; a literal is +i or -i."""

    n: int
    clauses: Tuple[Clause, ...]

    def __post_init__(self):
        if self.n < 0:
            raise CnfError("negative variable count")
        cl = []
        for c in self.clauses:
            c = tuple(int(x) for x in c)
            if len(c) != 3 or len(set(c)) != 3:
                raise CnfError(f"malformed clause {c}: need three distinct literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise CnfError(f"malformed clause {c}: literal {lit} out of range")
            cl.append(c)
        object.__setattr__(self, "clauses", tuple(cl))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment) -> bool:
        """``assignment[i-1]`` is the value of variable i."""
        return all(any((lit > 0) == bool(assignment[abs(lit) - 1]) for lit in c)
                   for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.n} {self.m}"]
        lines += [" ".join(str(x) for x in c) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    n = None
    expected = None
    lits: List[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"bad problem line: {line!r}")
            n, expected = int(parts[2]), int(parts[3])
            continue
        if n is None:
            raise CnfError("clause before the 'p cnf' line")
        try:
            lits.extend(int(x) for x in line.split())
        except ValueError:
            raise CnfError(f"bad clause line: {line!r}") from None
    if n is None:
        raise CnfError("missing 'p cnf' line")
    clauses, cur = [], []
    for x in lits:
        if x == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    if cur:
        clauses.append(tuple(cur))
    if expected is not None and expected != len(clauses):
        raise CnfError(f"header promises {expected} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


def satisfiable(phi: CnfFormula) -> bool:
    return any(phi.evaluate(a) for a in itertools.product((False, True), repeat=phi.n))


def random_3cnf(rng: np.random.Generator, n: int, m: int) -> CnfFormula:
    if n < 2 and m:
        raise CnfError("need at least two variables for a clause")
    clauses = []
    for _ in range(m):
        # three distinct literals; two of them may share a variable
        while True:
            vs = rng.integers(1, n + 1, size=3)
            signs = rng.integers(0, 2, size=3)
            c = tuple(int(v) if s else -int(v) for v, s in zip(vs, signs))
            if len(set(c)) == 3:
                break
        clauses.append(c)
    return CnfFormula(n, tuple(clauses))


def gen_3sat(phi: CnfFormula) -> ReductionOutput:
    """Literal vertices v(x), v(-x) and one occurrence vertex per literal
    occurrence.  Block of x: v(x), v(-x, c)..., v(-x), v(x, c)...

    alpha >= n + m iff the formula is satisfiable.
    """
    pos = {}
    nxt = 1
    for x in range(1, phi.n + 1):
        order = [("lit", x)]
        order += [("occ", -x, ci) for ci, c in enumerate(phi.clauses) if -x in c]
        order += [("lit", -x)]
        order += [("occ", x, ci) for ci, c in enumerate(phi.clauses) if x in c]
        for key in order:
            pos[key] = nxt
            nxt += 1
    edges = []
    for x in range(1, phi.n + 1):
        edges.append((pos[("lit", x)], pos[("lit", -x)]))
    for ci, c in enumerate(phi.clauses):
        occ = [pos[("occ", lit, ci)] for lit in c]
        edges += [(occ[0], occ[1]), (occ[0], occ[2]), (occ[1], occ[2])]
        for lit in c:
            edges.append((pos[("lit", -lit)], pos[("occ", lit, ci)]))
    g = OrderedGraph(nxt - 1, frozenset(edges))
    return ReductionOutput(g, phi.n + phi.m, "3sat", None,
                           {"variables": phi.n, "clauses": phi.m})
