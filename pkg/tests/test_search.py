import dataclasses

import pytest

from catalog import patterns_up_to
from oracles import brute_arrow
from treeramsey.bounds import pattern_bounds
from treeramsey.constructions import circulant_star_coloring
from treeramsey.embed import contains_mono_pattern
from treeramsey.graph_core import Color, TwoColoring, to_linear
from treeramsey.patterns import AugKind, Bistar, PlusEdge, Star, path, pattern_graph
from treeramsey.search import (AllColoringsContain, BoundedOnly, BudgetExhausted,
                               Counterexample, Prune, RamseyValue, SearchConfig,
                               compute_ramsey, decide_arrow, prune_check)

SMALL = patterns_up_to(6)
CFG = SearchConfig()


def kind(out):
    return type(out).__name__


def test_decide_examples():
    assert isinstance(decide_arrow(Star(3), 6), AllColoringsContain)
    out = decide_arrow(Star(3), 5)
    assert isinstance(out, Counterexample)
    for color in Color:
        assert not contains_mono_pattern(out.coloring, color, Star(3))
    assert isinstance(decide_arrow(Bistar(2, 2), 8), AllColoringsContain)
    assert isinstance(decide_arrow(Bistar(1, 1), 4), Counterexample)


def test_counterexample_for_circulant_order():
    # any counterexample will do; the circulant is one of them
    assert not any(contains_mono_pattern(circulant_star_coloring(3), c, Star(3)) for c in Color)


@pytest.mark.parametrize("p", [path(4), Bistar(1, 2), PlusEdge(Bistar(1, 1), AugKind.LL_DIFF),
                               PlusEdge(Star(2), AugKind.LL)], ids=str)
def test_decide_matches_brute_force(p):
    pg = pattern_graph(p)
    for N in range(1, 6):
        expected = brute_arrow(pg.edges, pg.n_vertices, N)
        assert isinstance(decide_arrow(p, N), AllColoringsContain) == expected, N


def test_frozen_brute_force_values():
    # frozen from full enumeration: P4 arrows at K5 but not K4; C4 does not arrow at K5
    assert kind(decide_arrow(path(4), 4)) == "Counterexample"
    assert kind(decide_arrow(path(4), 5)) == "AllColoringsContain"
    assert kind(decide_arrow(PlusEdge(Bistar(1, 1), AugKind.LL_DIFF), 5)) == "Counterexample"


@pytest.mark.parametrize("p", SMALL, ids=str)
def test_pruning_soundness(p):
    variants = [CFG.unpruned(),
                dataclasses.replace(CFG, prune_degree=False, prune_maxdeg_lemma=False),
                dataclasses.replace(CFG, symmetry_color_swap=False, symmetry_first_vertex=False),
                dataclasses.replace(CFG, symmetry_first_vertex=False)]
    for N in range(1, 7):
        ref = kind(decide_arrow(p, N, CFG))
        for cfg in variants:
            assert kind(decide_arrow(p, N, cfg)) == ref, (N, cfg)


@pytest.mark.parametrize("p", SMALL, ids=str)
def test_arrow_monotone_in_order(p):
    seen_arrow = False
    for N in range(1, 7):
        arrow = isinstance(decide_arrow(p, N), AllColoringsContain)
        assert arrow or not seen_arrow, N
        seen_arrow = arrow


@pytest.mark.parametrize("p", [a for a in SMALL if isinstance(a, PlusEdge)], ids=str)
def test_supergraph_monotone(p):
    for N in range(1, 7):
        if isinstance(decide_arrow(p, N), AllColoringsContain):
            assert isinstance(decide_arrow(p.base, N), AllColoringsContain)


def test_prune_check_examples():
    # vertex 0 fully colored in K_8 with blue degree 5 >= m + n + 1
    c = TwoColoring.empty(8)
    for j in range(1, 8):
        c = c.with_edge(0, j, Color.BLUE if j <= 5 else Color.RED)
    assert prune_check(c, Bistar(2, 2)) is Prune.PRUNE
    b12 = TwoColoring(5, blue=sum(1 << to_linear(i, j) for i, j in pattern_graph(Bistar(1, 2)).edges))
    assert prune_check(b12, Bistar(1, 2)) is Prune.PRUNE
    assert prune_check(TwoColoring.empty(8), Bistar(2, 2)) is Prune.CONTINUE
    # below 2m+n+2 the degree window is invalid and must stay off
    assert prune_check(c.restrict(7), Bistar(2, 2)) is Prune.CONTINUE


@pytest.mark.parametrize("p,value", [(path(4), 5), (Bistar(1, 2), 6), (Bistar(2, 2), 8),
                                     (Star(2), 3), (Star(3), 6), (Star(4), 7), (Bistar(1, 3), 7),
                                     (path(5), 6), (path(6), 8)], ids=str)
def test_compute_ramsey(p, value):
    res = compute_ramsey(p)
    assert isinstance(res, RamseyValue)
    assert res.value == value
    iv = pattern_bounds(p)
    assert iv.lo <= res.value <= iv.hi
    assert res.lower_certificate.n_vertices == value - 1
    for color in Color:
        assert not contains_mono_pattern(res.lower_certificate, color, p)


def test_budget_exhaustion_is_bounded_only():
    res = compute_ramsey(Bistar(3, 3), SearchConfig(node_budget=5000))
    assert isinstance(res, BoundedOnly)
    assert res.reason == "node budget"
    assert (res.interval.lo, res.interval.hi) == (11, 11)
    assert isinstance(decide_arrow(Bistar(3, 3), 11, SearchConfig(node_budget=5000)),
                      BudgetExhausted)


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        SearchConfig(node_budget=0)
    with pytest.raises(ValueError):
        SearchConfig(worker_count=0)


@pytest.mark.parametrize("workers", [2, 3])
def test_parallel_matches_serial(workers):
    cfg = SearchConfig(worker_count=workers)
    for p, N in [(Bistar(2, 2), 7), (Bistar(2, 2), 8), (Star(4), 6), (Star(4), 7)]:
        assert kind(decide_arrow(p, N, cfg)) == kind(decide_arrow(p, N))


def test_progress_callback_is_called():
    calls = []
    decide_arrow(Bistar(2, 2), 8, SearchConfig(symmetry_first_vertex=False),
                 progress=lambda *a: calls.append(a))
    assert calls and calls[-1][0] > 0
