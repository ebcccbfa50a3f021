"""Reduced-scale versions of the invariant suites, for ``omwis selftest``."""

from __future__ import annotations

import warnings
from typing import Any, Callable, Dict, List, Tuple

from .classify import NAMED, classify, family_pattern, resolve_pattern
from .core import DEFAULT_ORACLE_CAP, alpha_brute, alpha_value, is_free, poljak_double_subdivide
from .dispatch import solve_auto
from .generate import make_rng, random_free_graph, random_graph, random_weights
from .hardness import (
    LONG_VARIANTS,
    TWO_SCHEMES,
    gen_3sat,
    gen_long_subdivision,
    gen_two_subdivision,
    random_3cnf,
    verify_reduction,
)
from .poly import solve_chordfree, solve_oneedgek, solve_p3free
from .qpoly import solve_aabb, solve_aakbb, solve_ababk
from .subexp import solve_abbak

Solver = Callable[..., Any]


def _solvers() -> List[Tuple[str, str, int, Solver]]:
    out = [
        ("p3free", "p3", 0, lambda g, w: solve_p3free(g, w)),
        ("chordfree", "chord", 0, lambda g, w: solve_chordfree(g, w)),
        ("chordfree-rev", "chordrev", 0, lambda g, w: solve_chordfree(g, w, "mirrored")),
        ("aabb", "aakbb", 0, lambda g, w: solve_aabb(g, w)),
    ]
    for k in range(3):
        out.append((f"oneedge({k})", "oneedge", k, lambda g, w, k=k: solve_oneedgek(g, w, k)))
        out.append((f"aakbb({k})", "aakbb", k, lambda g, w, k=k: solve_aakbb(g, w, k)))
        out.append((f"ababk({k})", "ababk", k, lambda g, w, k=k: solve_ababk(g, w, k)))
        out.append((f"abbak({k})", "abbak", k, lambda g, w, k=k: solve_abbak(g, w, k)))
    return out


def run_selftest(seed: int = 0, trials: int = 20, cap: int = DEFAULT_ORACLE_CAP,
                 max_n: int = 10) -> Dict[str, Any]:
    suites: Dict[str, Dict[str, int]] = {}

    def record(name: str, fails: int, count: int) -> None:
        suites[name] = {"trials": count, "failures": fails}

    for idx, (name, fam, k, solver) in enumerate(_solvers()):
        h = family_pattern(fam, k)
        fails = 0
        for t in range(trials):
            rng = make_rng(seed, 1, idx, t)
            n = int(rng.integers(1, max_n + 1))
            g = random_free_graph(rng, n, h, float(rng.random()))
            w = random_weights(rng, n)
            if solver(g, w).weight != alpha_brute(g, w, cap=cap).weight:
                fails += 1
        record(f"oracle {name}", fails, trials)

    fails = 0
    for t in range(trials):
        rng = make_rng(seed, 2, t)
        n = int(rng.integers(2, 9))
        g = random_graph(rng, n, float(rng.random()))
        if not g.m:
            continue
        e = g.sorted_edges()[int(rng.integers(0, g.m))]
        if alpha_value(poljak_double_subdivide(g, e)) != alpha_value(g) + 1:
            fails += 1
    record("poljak", fails, trials)

    fails = 0
    for t in range(trials):
        rng = make_rng(seed, 3, t)
        n = int(rng.integers(1, max_n + 1))
        g = random_graph(rng, n, float(rng.random()))
        w = random_weights(rng, n)
        hname = sorted(NAMED)[int(rng.integers(0, len(NAMED)))]
        h = resolve_pattern(hname)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            if not is_free(g, h):
                continue
            if solve_auto(g, w, h).weight != alpha_brute(g, w, cap=cap).weight:
                fails += 1
    record("dispatch", fails, trials)

    fails = 0
    count = 0
    for t in range(trials):
        rng = make_rng(seed, 4, t)
        phi = random_3cnf(rng, int(rng.integers(2, 5)), int(rng.integers(1, 5)))
        count += 1
        if not verify_reduction(gen_3sat(phi), phi)["ok"]:
            fails += 1
        g = random_graph(rng, int(rng.integers(1, 6)), float(rng.random()))
        for scheme in TWO_SCHEMES:
            count += 1
            if not verify_reduction(gen_two_subdivision(g, 1, scheme), g, 1)["ok"]:
                fails += 1
        for variant in LONG_VARIANTS:
            count += 1
            if not verify_reduction(gen_long_subdivision(g, 1, variant), g, 1)["ok"]:
                fails += 1
    record("reductions", fails, count)

    spots = {"p3": "Polynomial", "aabb": "Quasipolynomial", "abab": "Quasipolynomial",
             "abba": "Subexponential", "abxba": "NPHard", "bad": "NPHard", "badc": "NPHard",
             "aabbcc": "NPHard", "chord": "Polynomial"}
    fails = sum(classify(resolve_pattern(p)).cls != c for p, c in spots.items())
    record("classify", fails, len(spots))

    ok = all(r["failures"] == 0 for r in suites.values())
    return {"ok": ok, "seed": seed, "suites": suites}

