import itertools

import pytest

from helpers import naive_alpha
from omwis.core import OracleCapExceeded, OrderedGraph, alpha_value, parse_pattern_literal
from omwis.generate import make_rng, random_graph
from omwis.hardness import (
    CATALOG,
    NOT_CHECKED,
    CnfError,
    CnfFormula,
    Train,
    TrainError,
    braiding_pair,
    bubble_swaps,
    caboose,
    check_interchangeable,
    compose_gadgets,
    couple_trains,
    exact_alpha,
    gadget_boundaried,
    gadget_for,
    gen_3sat,
    gen_long_subdivision,
    gen_train_reduction,
    gen_two_subdivision,
    identity_gadget,
    locomotive,
    mis_size,
    parse_dimacs,
    random_3cnf,
    satisfiable,
    swap_gadget,
    verify_reduction,
)

K2 = OrderedGraph(2, frozenset({(1, 2)}))
P3 = OrderedGraph(3, frozenset({(1, 2), (2, 3)}))


def apply_swaps(ell, swaps):
    """Slot reached by the token starting at slot i, after the swaps in order."""
    where = list(range(1, ell + 1))
    for j in swaps:
        where = [j + 1 if s == j else j if s == j + 1 else s for s in where]
    return tuple(where)


# -- CNF -------------------------------------------------------------------


@pytest.mark.parametrize("clauses", [[(1, 2)], [(1, 1, 2)], [(1, 2, 4)], [(0, 1, 2)]])
def test_cnf_rejects_malformed_clauses(clauses):
    with pytest.raises(CnfError):
        CnfFormula(3, tuple(clauses))


def test_dimacs_round_trip():
    phi = CnfFormula(3, ((1, -2, 3), (-1, 2, -3)))
    text = phi.to_dimacs()
    assert text.splitlines()[0] == "p cnf 3 2"
    assert parse_dimacs("c comment\n" + text) == phi
    # clauses may span lines
    assert parse_dimacs("p cnf 3 1\n1 -2\n3 0\n") == CnfFormula(3, ((1, -2, 3),))


@pytest.mark.parametrize("text", ["1 2 3 0\n", "p cnf 3 2\n1 2 3 0\n", "p dnf 3 1\n1 2 3 0\n",
                                  "p cnf 3 1\n1 x 3 0\n"])
def test_dimacs_errors(text):
    with pytest.raises(CnfError):
        parse_dimacs(text)


def test_satisfiable_examples():
    every = tuple(tuple(s * v for s, v in zip(signs, (1, 2, 3)))
                  for signs in itertools.product((1, -1), repeat=3))
    assert not satisfiable(CnfFormula(3, every))
    assert satisfiable(CnfFormula(3, every[1:]))
    assert satisfiable(CnfFormula(0, ()))


def test_random_3cnf_is_reproducible():
    a = random_3cnf(make_rng(5), 4, 6)
    assert a == random_3cnf(make_rng(5), 4, 6)
    assert a.m == 6 and a.n == 4


# -- 3-SAT reduction ------------------------------------------------------


def test_3sat_sizes_and_threshold():
    phi = CnfFormula(3, ((1, -2, 3), (-1, 2, 3)))
    out = gen_3sat(phi)
    assert out.graph.n == 2 * 3 + 3 * 2
    assert out.threshold == 3 + 2
    rep = verify_reduction(out, phi)
    assert rep["equivalence"] and rep["satisfiable"] and rep["ok"]
    assert rep["freeness"] == {"bad": True}


def test_3sat_matches_satisfiability():
    for t in range(60):
        rng = make_rng(91, t)
        phi = random_3cnf(rng, int(rng.integers(2, 5)), int(rng.integers(0, 9)))
        out = gen_3sat(phi)
        assert (mis_size(out.graph) >= out.threshold) == satisfiable(phi)


# -- subdivisions ---------------------------------------------------------


@pytest.mark.parametrize("scheme", ["LR", "RL", "RcoreL", "coreLR"])
def test_two_subdivision_sizes(scheme):
    g = random_graph(make_rng(92), 5, 0.5)
    out = gen_two_subdivision(g, 2, scheme)
    assert out.graph.n == g.n + 2 * g.m
    assert out.graph.m == 3 * g.m
    assert out.offset == g.m and out.threshold == 2 + g.m
    assert alpha_value(out.graph) == naive_alpha(g) + g.m


def test_two_subdivision_orders():
    lr = gen_two_subdivision(K2, 1, "LR").graph
    assert lr.literal() == "4:1-3,2-4,3-4"
    assert gen_two_subdivision(K2, 1, "RcoreL").graph.literal() == "4:1-3,1-4,2-4"
    assert gen_two_subdivision(K2, 1, "coreLR").graph.literal() == "4:1-3,2-4,3-4"
    with pytest.raises(ValueError):
        gen_two_subdivision(K2, 1, "LL")


@pytest.mark.parametrize("variant", ["straight", "flip"])
def test_long_subdivision_offset(variant):
    for t in range(40):
        rng = make_rng(93, t)
        g = random_graph(rng, int(rng.integers(1, 5)), float(rng.random()))
        out = gen_long_subdivision(g, 1, variant)
        assert (out.graph.n - g.n) == 2 * out.offset
        assert mis_size(out.graph) == naive_alpha(g) + out.offset
        rep = verify_reduction(out, g, 1)
        assert rep["ok"], rep


# -- trains ---------------------------------------------------------------


def test_train_validation():
    g = OrderedGraph(4, frozenset({(1, 2), (3, 4)}))
    with pytest.raises(TrainError):
        Train(g, (2,), (4,))      # inputs not a prefix
    with pytest.raises(TrainError):
        Train(g, (1,), (3,))      # outputs not a suffix
    with pytest.raises(TrainError):
        Train(g, (1, 2), ())      # inputs not independent
    with pytest.raises(TrainError):
        Train(OrderedGraph(2), (1, 2), (2,))  # overlap
    ok = Train(g, (1,), (4,))
    with pytest.raises(TrainError):
        couple_trains(ok, Train(OrderedGraph(3), (1, 2), ()))


def test_couple_trains_identifies_boundaries():
    a = Train(OrderedGraph(2, frozenset({(1, 2)})), (1,), (2,))
    c = couple_trains(a, a)
    assert c.graph.literal() == "3:1-2,2-3" and c.inputs == (1,) and c.outputs == (3,)


@pytest.mark.parametrize("target, n, kvec", [("abxba", 11, (4, 6)), ("abccab", 10, (5, 5))])
def test_swap_gadget_facts(target, n, kvec):
    s = swap_gadget(target, 2, 1)
    assert s.train.graph.n == n
    assert s.kvec == kvec and s.sigma == (2, 1)
    with pytest.raises(TrainError):
        swap_gadget(target, 2, 2)


def test_compose_and_bubble():
    s = swap_gadget("abccab", 2, 1)
    c = compose_gadgets(s, s)
    assert c.sigma == (1, 2) and c.kvec == (9, 9)
    assert bubble_swaps((3, 2, 1)) == [1, 2, 1]
    assert gadget_for("abxba", (1, 2, 3)) is None
    assert identity_gadget(3).kvec == (2, 2, 2)


def test_bubble_swaps_realise_the_permutation():
    for sigma in itertools.permutations(range(1, 6)):
        assert apply_swaps(5, bubble_swaps(sigma)) == sigma


@pytest.mark.parametrize("target", ["abxba", "abccab"])
def test_gadget_for_sigma(target):
    for sigma in itertools.permutations(range(1, 4)):
        gad = gadget_for(target, sigma)
        if gad is not None:
            assert gad.sigma == sigma


def test_locomotive_and_caboose():
    loco, slots = locomotive(P3)
    assert slots == [(1, 0), (2, 0), (2, 1), (3, 1)]
    assert loco.graph.n == 7 and loco.inputs == () and len(loco.outputs) == 4
    cab = caboose("abccab", 2)
    assert cab.graph.literal() == "8:1-8,2-7,3-6,4-5,5-6,7-8"


def test_k2_train_has_no_swaps():
    out = gen_train_reduction(K2, 1, "abxba")
    assert out.graph.n == 6 and out.offset == 2
    assert out.provenance["swaps"] == 0
    assert naive_alpha(out.graph) == 1 + 2
    with pytest.raises(ValueError):
        gen_train_reduction(OrderedGraph(3), 1, "abxba")


@pytest.mark.parametrize("target", ["abxba", "abccab"])
def test_train_reduction_exact_offset(target):
    for t in range(25):
        rng = make_rng(94, t)
        g = random_graph(rng, int(rng.integers(2, 5)), 0.6)
        if not g.m:
            continue
        out = gen_train_reduction(g, 2, target)
        rep = verify_reduction(out, g, 2)
        assert rep["offset_exact"] and rep["ok"], rep


def test_braiding_pair_is_interchangeable():
    p1, p2 = braiding_pair()
    assert check_interchangeable(p1, p2, make_rng(95), trials=60) == []


@pytest.mark.parametrize("target", ["abxba", "abccab"])
def test_swap_gadget_interchangeable(target):
    pg, forest = gadget_boundaried(swap_gadget(target, 3, 2))
    assert check_interchangeable(pg, forest, make_rng(96, len(target)), trials=40) == []


def test_interchangeability_detects_a_difference():
    pg, forest = gadget_boundaried(identity_gadget(2))
    other = gadget_boundaried(swap_gadget("abccab", 2, 1))[0]
    # same boundary names, different behaviour
    assert check_interchangeable(forest, other, make_rng(97), trials=60)


# -- exact solvers and verification ---------------------------------------


def test_mis_size_matches_oracle():
    for t in range(300):
        rng = make_rng(98, t)
        g = random_graph(rng, int(rng.integers(0, 16)), float(rng.random()))
        assert mis_size(g) == alpha_value(g)


def test_exact_alpha_caps():
    big = OrderedGraph(30, frozenset((i, i + 1) for i in range(1, 30)))
    assert exact_alpha(big) == 15
    with pytest.raises(OracleCapExceeded):
        exact_alpha(big, exact_cap=20)


def test_catalog_and_not_checked():
    assert set(CATALOG) == set(NOT_CHECKED)
    assert NOT_CHECKED["coreLR"] == ["acbnde", "aednbc"]
    rep = verify_reduction(gen_two_subdivision(P3, 2, "coreLR"), P3, 2)
    assert rep["not_checked"] == ["acbnde", "aednbc"]
    assert rep["freeness"] == {"abbcca": True, "aabbcc": True}
    with pytest.raises(ValueError):
        verify_reduction(gen_two_subdivision(P3, 2, "LR"), P3)


def test_verify_flags_a_wrong_threshold():
    out = gen_two_subdivision(P3, 2, "LR")
    out.threshold += 1
    out.offset += 1
    rep = verify_reduction(out, P3, 2)
    assert not rep["equivalence"] and rep["offset_exact"] is False and not rep["ok"]


def test_pattern_literals_used_by_catalog():
    from omwis.classify import NAMED
    for _, (_, names) in CATALOG.items():
        for name in names:
            assert parse_pattern_literal(NAMED[name]).n >= 3
