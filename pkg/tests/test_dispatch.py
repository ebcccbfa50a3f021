import itertools
import warnings

import pytest
from hypothesis import given, settings

from helpers import ordered_graphs, weighted_graphs
from omwis.classify import family_pattern, resolve_pattern
from omwis.core import (
    OrderedGraph,
    ValidationError,
    WeightMap,
    alpha_brute,
    check_solution,
    is_free,
    parse_pattern_literal,
)
from omwis.dispatch import HardPatternWarning, pacman_reduce, route_for, solve_auto, solve_generic
from omwis.generate import make_rng, random_free_graph, random_graph, random_weights


def branch_value(g, w, branches):
    best = None
    for keep, credit, chosen in branches:
        sub, mapping = g.induced(keep)
        val = alpha_brute(sub, w.restrict(mapping)).weight + credit
        assert g.is_independent(chosen)
        assert not any(g.has_edge(a, b) for a in chosen for b in keep)
        best = val if best is None else max(best, val)
    return best


def test_pacman_empty_graph():
    inner, branches = pacman_reduce(OrderedGraph(0), None, resolve_pattern("ext p3(1)"))
    assert inner.literal() == "3:1-2,2-3"
    assert branches == [(frozenset(), 0, frozenset())]


def test_pacman_on_a_clique():
    k4 = OrderedGraph(4, frozenset(itertools.combinations(range(1, 5), 2)))
    w = WeightMap((1, 3, 2, 1))
    _, branches = pacman_reduce(k4, w, resolve_pattern("ext p3(1)"))
    # optimum is a single vertex: only credit-only branches survive
    assert len(branches) == 1 + 4
    assert branch_value(k4, w, branches) == 3


def test_pacman_one_sided():
    h = parse_pattern_literal("4:2-3,3-4")
    inner, branches = pacman_reduce(random_graph(make_rng(1), 6, 0.5), None, h)
    assert inner.literal() == "3:1-2,2-3"
    with pytest.raises(ValueError):
        pacman_reduce(OrderedGraph(3), None, family_pattern("p3"))


@settings(max_examples=200)
@given(weighted_graphs(0, 10))
def test_pacman_identity(gw):
    g, w = gw
    for lit in ("5:2-3,3-4", "4:2-3,3-4", "4:1-2,2-3"):
        _, branches = pacman_reduce(g, w, parse_pattern_literal(lit))
        assert len(branches) <= g.n ** 2 + 1
        assert branch_value(g, w, branches) == alpha_brute(g, w).weight


def test_pacman_branches_are_inner_free():
    h = resolve_pattern("ext abba(1)")
    inner = family_pattern("abbak", 0)
    for t in range(100):
        rng = make_rng(81, t)
        g = random_free_graph(rng, int(rng.integers(2, 11)), h, float(rng.random()))
        _, branches = pacman_reduce(g, None, h)
        for keep, _, _ in branches:
            sub, _ = g.induced(keep)
            assert is_free(sub, inner)


ROUTES = {
    "aabb": ("aakbb", 0, 0, 0),
    "abab": ("ababk", 0, 0, 0),
    "abba": ("abbak", 0, 0, 0),
    "ext abba(2)": ("abbak", 0, 2, 2),
    "2:1-2": ("p3", None, 0, 0),
    "3:1-3": ("oneedge", 1, 0, 0),
    "4:1-4": ("oneedge", 2, 0, 0),
    "chordrev": ("chordrev", None, 0, 0),
    "5:1-2,4-5": ("aakbb", 1, 0, 0),
    "4:2-3": ("p3", None, 1, 1),
    "abxba": (None, None, 0, 0),
}


@pytest.mark.parametrize("pat, want", sorted(ROUTES.items()))
def test_routing_table(pat, want):
    r = route_for(resolve_pattern(pat))
    assert (r.family, r.k, r.lead, r.trail) == want
    assert route_for(resolve_pattern(pat)) == r


def test_route_description():
    assert route_for(resolve_pattern("ext abba(2)")).describe() == "pacman x2 -> abbak(0)"


def test_hard_pattern_warns():
    g = OrderedGraph(3, frozenset({(1, 2)}))
    with pytest.warns(HardPatternWarning):
        assert solve_auto(g, None, resolve_pattern("abxba")).weight == 2


def test_validate_is_an_error_not_a_fallback():
    with pytest.raises(ValidationError):
        solve_auto(family_pattern("aakbb", 0), None, family_pattern("aakbb", 0), validate=True)


def test_generic_examples():
    assert solve_generic(OrderedGraph(5), WeightMap((1, 2, 3, 4, 5))).weight == 15
    k4 = OrderedGraph(4, frozenset(itertools.combinations(range(1, 5), 2)))
    assert solve_generic(k4, WeightMap((1, 2, 3, 4))).weight == 4
    assert solve_generic(OrderedGraph(0)).weight == 0


def test_generic_matches_oracle():
    for t in range(200):
        rng = make_rng(82, t)
        n = int(rng.integers(1, 19))
        g = random_graph(rng, n, float(rng.random()))
        w = random_weights(rng, n)
        sol = solve_generic(g, w)
        check_solution(g, w, sol)
        assert sol.weight == alpha_brute(g, w).weight


@settings(max_examples=300)
@given(ordered_graphs(1, 4))
def test_auto_matches_oracle_for_any_small_pattern(h):
    if not h.m:
        return
    rng = make_rng(83, *sorted(v for e in h.edges for v in e), h.n)
    for t in range(4):
        n = int(rng.integers(1, 13))
        g = random_free_graph(rng, n, h, float(rng.random()))
        w = random_weights(rng, n)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", HardPatternWarning)
            sol = solve_auto(g, w, h, validate=True)
        check_solution(g, w, sol)
        assert sol.weight == alpha_brute(g, w).weight


@pytest.mark.parametrize("pat", ["ext p3(1)", "ext abba(2)", "ext aabb(1)", "ext abab(1)",
                                 "4:2-3", "ext chord(1)", "ext oneedge(1)"])
def test_auto_with_padded_patterns(pat):
    h = resolve_pattern(pat)
    for t in range(40):
        rng = make_rng(84, t, h.n)
        n = int(rng.integers(1, 11))
        g = random_free_graph(rng, n, h, float(rng.random()))
        w = random_weights(rng, n)
        assert solve_auto(g, w, h).weight == alpha_brute(g, w).weight


def test_edgeless_pattern():
    h = parse_pattern_literal("3:")
    g = OrderedGraph(2, frozenset({(1, 2)}))
    assert solve_auto(g, None, h).weight == 1
