"""omwis command line: solve, classify, gen, verify, bench, selftest.

Every command prints one JSON document on stdout.  Failures print
``{"error": ..., "message": ...}`` and exit with 2 for validation failures
and 1 for I/O or usage problems.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

from . import __version__
from .classify import classify, family_pattern, resolve_pattern
from .core import (
    DEFAULT_ORACLE_CAP,
    GraphError,
    OracleCapExceeded,
    OrderedGraph,
    SearchStats,
    Solution,
    ValidationError,
    WeightMap,
    alpha_brute,
    fraction_str,
    parse_graph,
    require_free,
)
from .dispatch import HardPatternWarning, solve_auto, solve_generic
from .generate import make_rng, random_free_graph, random_graph, random_weights
from .hardness import (
    CnfError,
    ReductionOutput,
    gen_3sat,
    gen_long_subdivision,
    gen_train_reduction,
    gen_two_subdivision,
    parse_dimacs,
    random_3cnf,
    verify_reduction,
)
from .poly import solve_chordfree, solve_oneedgek, solve_p3free
from .qpoly import solve_aabb, solve_aakbb, solve_ababk
from .subexp import StructureError, solve_abbak

EXIT_USAGE = 1
EXIT_VALIDATION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2; usage errors are 1 here
        raise UsageError(message)


# ---------------------------------------------------------------------------
# algorithms

# name -> (family pattern or None, whether --k matters)
ALGOS: Dict[str, Tuple[Optional[str], bool]] = {
    "auto": (None, False),
    "brute": (None, False),
    "generic": (None, False),
    "p3free": ("p3", False),
    "chordfree": ("chord", False),
    "chordfree-rev": ("chordrev", False),
    "oneedgek": ("oneedge", True),
    "aabb": ("aakbb", False),
    "aakbb": ("aakbb", True),
    "ababk": ("ababk", True),
    "abbak": ("abbak", True),
}


def algo_pattern(algo: str, k: int) -> Optional[OrderedGraph]:
    fam, param = ALGOS[algo]
    if fam is None:
        return None
    return family_pattern(fam, k if param else 0)


def run_algo(algo: str, g: OrderedGraph, w: WeightMap, k: int, stats: SearchStats,
             pattern: Optional[OrderedGraph] = None, tau: Optional[int] = None,
             oracle_cap: int = DEFAULT_ORACLE_CAP) -> Solution:
    if algo == "auto":
        if pattern is None:
            raise UsageError("--algo auto needs --pattern")
        return solve_auto(g, w, pattern, stats=stats, tau_override=tau)
    if algo == "brute":
        return alpha_brute(g, w, cap=oracle_cap)
    if algo == "generic":
        return solve_generic(g, w, stats)
    if algo == "p3free":
        return solve_p3free(g, w, stats=stats)
    if algo == "chordfree":
        return solve_chordfree(g, w, "forward", stats=stats)
    if algo == "chordfree-rev":
        return solve_chordfree(g, w, "mirrored", stats=stats)
    if algo == "oneedgek":
        return solve_oneedgek(g, w, k, stats=stats)
    if algo == "aabb":
        return solve_aabb(g, w, stats=stats)
    if algo == "aakbb":
        return solve_aakbb(g, w, k, stats=stats)
    if algo == "ababk":
        return solve_ababk(g, w, k, stats=stats)
    if algo == "abbak":
        return solve_abbak(g, w, k, stats=stats, tau_override=tau)
    raise UsageError(f"unknown algorithm {algo!r}")


# ---------------------------------------------------------------------------
# inputs

_BUILTIN = re.compile(r"^(edgeless|K|P|C)(\d+)$")


def builtin_graph(name: str) -> Optional[OrderedGraph]:
    """edgelessN, KN (complete), PN (path 1-2-..-N), CN (cycle)."""
    mt = _BUILTIN.match(name)
    if not mt:
        return None
    kind, n = mt.group(1), int(mt.group(2))
    if kind == "edgeless":
        es = []
    elif kind == "K":
        es = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    elif kind == "P":
        es = [(i, i + 1) for i in range(1, n)]
    else:
        if n < 3:
            raise UsageError("a cycle needs at least 3 vertices")
        es = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return OrderedGraph(n, frozenset(es))


def load_graph(source: str) -> Tuple[OrderedGraph, WeightMap]:
    g = builtin_graph(source)
    if g is not None and not Path(source).exists():
        return g, WeightMap.unit(g.n)
    return parse_graph(Path(source).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# commands


def cmd_solve(args) -> Dict[str, Any]:
    g, w = load_graph(args.graph)
    pattern = resolve_pattern(args.pattern) if args.pattern else None
    algo = args.algo or ("auto" if pattern is not None else "generic")
    if algo not in ALGOS:
        raise UsageError(f"unknown algorithm {algo!r}; choose from {sorted(ALGOS)}")
    if args.validate:
        check = pattern if algo == "auto" else algo_pattern(algo, args.k)
        if check is not None:
            require_free(g, check, label=args.pattern if algo == "auto" else algo)
    stats = SearchStats(trace=[] if args.trace else None)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", HardPatternWarning)
        sol = run_algo(algo, g, w, args.k, stats, pattern, args.tau_override, args.oracle_cap)
    out = sol.to_json()
    out["algo"] = algo
    if caught:
        out["warnings"] = [str(c.message) for c in caught]
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for row in stats.trace:
                fh.write(json.dumps(row, sort_keys=True) + "\n")
    return out


def cmd_classify(args) -> Dict[str, Any]:
    h = resolve_pattern(args.pattern)
    cc = classify(h)
    out = cc.to_json()
    if cc.degenerate:
        out["degenerate"] = True
    return out


def _emit_reduction(out: ReductionOutput, args) -> Dict[str, Any]:
    doc = out.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n",
                                  encoding="utf-8")
        return {k: v for k, v in doc.items() if k != "graph"} | {"written": args.out}
    return doc


def cmd_gen(args) -> Dict[str, Any]:
    kind = args.kind
    if kind == "3sat":
        if args.cnf:
            phi = parse_dimacs(Path(args.cnf).read_text(encoding="utf-8"))
        else:
            phi = random_3cnf(make_rng(args.seed, 3), args.vars, args.clauses)
        return _emit_reduction(gen_3sat(phi), args) | {"cnf": phi.to_dimacs()}
    if not args.graph:
        raise UsageError(f"gen {kind} needs --graph")
    g, _ = load_graph(args.graph)
    if kind == "subdiv2":
        out = gen_two_subdivision(g, args.k, args.scheme)
    elif kind == "longsub":
        out = gen_long_subdivision(g, args.k, args.variant)
    elif kind == "train":
        out = gen_train_reduction(g, args.k, args.target)
    else:
        raise UsageError(f"unknown generator {kind!r}")
    return _emit_reduction(out, args)


def load_reduction(path: str) -> ReductionOutput:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    try:
        g, _ = parse_graph(doc["graph"])
        return ReductionOutput(g, int(doc["threshold"]), doc["scheme"], doc.get("offset"),
                               doc.get("provenance", {}))
    except KeyError as exc:
        raise UsageError(f"{path}: missing field {exc}") from None


def cmd_verify(args) -> Dict[str, Any]:
    out = load_reduction(args.out)
    if out.scheme == "3sat":
        src = parse_dimacs(Path(args.src).read_text(encoding="utf-8"))
        return verify_reduction(out, src, oracle_cap=args.oracle_cap)
    g, _ = load_graph(args.src)
    if args.k is None:
        raise UsageError("verify needs --k for a graph source")
    return verify_reduction(out, g, args.k, oracle_cap=args.oracle_cap)


# bench ---------------------------------------------------------------------

# suite -> (algo, pattern family, default k, edge probability)
SUITES: Dict[str, Tuple[str, Optional[str], int, float]] = {
    "p3free": ("p3free", "p3", 0, 0.5),
    "chordfree": ("chordfree", "chord", 0, 0.5),
    "chordfree-rev": ("chordfree-rev", "chordrev", 0, 0.5),
    "oneedgek": ("oneedgek", "oneedge", 1, 0.5),
    "aabb": ("aabb", "aakbb", 0, 0.5),
    "aakbb": ("aakbb", "aakbb", 1, 0.5),
    "ababk": ("ababk", "ababk", 1, 0.5),
    "abbak": ("abbak", "abbak", 0, 0.5),
    "generic": ("generic", None, 0, 0.3),
}


def _bench_run(job: Tuple[str, int, int, int, int, int]) -> Dict[str, Any]:
    suite, n, k, seed, rep, cap = job
    algo, fam, _, p = SUITES[suite]
    rng = make_rng(seed, n, rep)
    if fam is None:
        g = random_graph(rng, n, p)
    else:
        g = random_free_graph(rng, n, family_pattern(fam, k), p)
    w = random_weights(rng, n)
    sol = run_algo(algo, g, w, k, SearchStats())
    row = {"instance": f"{suite}-n{n}-s{seed}-r{rep}", "n": g.n, "m": g.m, "algo": algo,
           "alpha": fraction_str(sol.weight), "nodes": sol.nodes,
           "millis": round(sol.millis, 3)}
    if n <= cap:
        ref = alpha_brute(g, w, cap=cap).weight
        if ref != sol.weight:
            raise ValidationError(f"{row['instance']}: {algo} gave {sol.weight}, oracle {ref}")
    return row


BENCH_FIELDS = ["instance", "n", "m", "algo", "alpha", "nodes", "millis"]


def cmd_bench(args) -> Dict[str, Any]:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    k = args.k if args.k is not None else SUITES[args.suite][2]
    sizes = [int(s) for s in args.sizes.split(",") if s]
    jobs = [(args.suite, n, k, args.seed, r, args.oracle_cap)
            for n in sizes for r in range(args.reps)]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            rows = list(pool.map(_bench_run, jobs))
    else:
        rows = [_bench_run(j) for j in jobs]
    if args.deterministic:
        for r in rows:
            r["millis"] = 0
    # single writer, rows in job order
    fh = open(args.csv, "w", newline="", encoding="utf-8") if args.csv else sys.stdout
    try:
        writer = csv.DictWriter(fh, fieldnames=BENCH_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return {"suite": args.suite, "k": k, "runs": len(rows), "csv": args.csv or "-"}


# selftest ------------------------------------------------------------------


def cmd_selftest(args) -> Dict[str, Any]:
    from .selftest import run_selftest

    report = run_selftest(args.seed, trials=args.trials, cap=args.oracle_cap)
    if not report["ok"]:
        raise ValidationError("selftest failed: " + ", ".join(
            name for name, r in report["suites"].items() if r["failures"]))
    return report


# ---------------------------------------------------------------------------


def _common_flags(top: bool) -> argparse.ArgumentParser:
    """Global flags, accepted before or after the subcommand.  The copy
    attached to subcommands has no defaults, so it cannot clobber a value
    given before the subcommand name."""
    def d(value):
        return value if top else argparse.SUPPRESS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=d(0), help="seed for random suites (default 0)")
    common.add_argument("--oracle-cap", type=int, default=d(DEFAULT_ORACLE_CAP),
                        help="largest n handed to the brute-force oracle")
    common.add_argument("--deterministic", action="store_true", default=d(False),
                        help="zero out timings so identical runs give identical bytes")
    common.add_argument("--validate", action="store_true", default=d(False),
                        help="check pattern freeness before solving")
    common.add_argument("--json", action="store_true", default=d(False),
                        help="compact single-line JSON")
    return common


def build_parser() -> argparse.ArgumentParser:
    top, common = _common_flags(True), _common_flags(False)

    p = _Parser(prog="omwis", description="MWIS in ordered graphs excluding a pattern.",
                parents=[top])
    p.add_argument("--version", action="version", version=f"omwis {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("solve", parents=[common], help="solve one instance")
    s.add_argument("--graph", required=True, help="graph file, or edgelessN / KN / PN / CN")
    s.add_argument("--pattern", help="forbidden pattern: literal, name or family(k)")
    s.add_argument("--algo", help=f"one of {', '.join(ALGOS)}")
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--tau-override", type=int, default=None)
    s.add_argument("--trace", help="write the branch tree as JSON lines")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("classify", parents=[common], help="complexity class of a pattern")
    c.add_argument("--pattern", required=True)
    c.set_defaults(func=cmd_classify)

    gp = sub.add_parser("gen", parents=[common], help="hardness instance generators")
    gp.add_argument("kind", choices=["3sat", "subdiv2", "longsub", "train"])
    gp.add_argument("--cnf", help="DIMACS CNF file (3sat)")
    gp.add_argument("--vars", type=int, default=4, help="random 3sat: variables")
    gp.add_argument("--clauses", type=int, default=4, help="random 3sat: clauses")
    gp.add_argument("--graph")
    gp.add_argument("--k", type=int, default=0)
    gp.add_argument("--scheme", default="LR", choices=["LR", "RL", "RcoreL", "coreLR"])
    gp.add_argument("--variant", default="straight", choices=["straight", "flip"])
    gp.add_argument("--target", default="abxba", choices=["abxba", "abccab"])
    gp.add_argument("--out", help="write the instance JSON here")
    gp.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", parents=[common], help="check a generated instance")
    v.add_argument("--out", required=True, help="instance JSON written by gen")
    v.add_argument("--src", required=True, help="source graph or CNF file")
    v.add_argument("--k", type=int)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", parents=[common], help="run a benchmark suite to CSV")
    b.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)}")
    b.add_argument("--sizes", default="8,12,16")
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--k", type=int)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--csv", help="CSV path (default stdout)")
    b.set_defaults(func=cmd_bench)

    t = sub.add_parser("selftest", parents=[common], help="reduced invariant suites")
    t.add_argument("--trials", type=int, default=20)
    t.set_defaults(func=cmd_selftest)
    return p


def _dump(doc: Any, compact: bool) -> str:
    if compact:
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return json.dumps(doc, sort_keys=True, indent=2)


def _fail(code: int, kind: str, message: str, **extra) -> int:
    doc = {"error": kind, "message": message} | extra
    print(json.dumps(doc, sort_keys=True), file=sys.stdout)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("missing command: solve, classify, gen, verify, bench or selftest")
        doc = args.func(args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except ValidationError as exc:
        emb = list(exc.embedding) if getattr(exc, "embedding", None) else None
        return _fail(EXIT_VALIDATION, "validation", str(exc), embedding=emb)
    except StructureError as exc:
        return _fail(EXIT_VALIDATION, "validation", str(exc))
    except OracleCapExceeded as exc:
        return _fail(EXIT_USAGE, "oracle-cap", str(exc))
    except (OSError, GraphError, CnfError, json.JSONDecodeError) as exc:
        return _fail(EXIT_USAGE, "io", str(exc))
    except ValueError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    if isinstance(doc, dict):
        doc.setdefault("seed", args.seed)
        if args.deterministic and "millis" in doc:
            doc["millis"] = 0
    if not (args.command == "bench" and not args.csv):
        print(_dump(doc, args.json))
    else:
        print(_dump(doc, True), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
