import itertools
import random

import pytest
from hypothesis import given, strategies as st

from catalog import near_extremal_colorings
from oracles import all_colorings, brute_contains
from treeramsey.constructions import (circulant_star_coloring, split_clique_coloring,
                                      star_plus_edge_coloring)
from treeramsey.embed import (contains_mono, contains_mono_bistar, contains_mono_pattern,
                              contains_mono_star, graph_contains, partial_contains_mono)
from treeramsey.graph_core import Color, TwoColoring, complement, n_edges, to_linear
from treeramsey.patterns import (AugKind, Bistar, Caterpillar, PlusEdge, Star, path,
                                 pattern_graph)

BLUE, RED = Color.BLUE, Color.RED


def _blue_only(n, edges):
    return TwoColoring(n, blue=sum(1 << to_linear(i, j) for i, j in edges))


# -- fixed examples ------------------------------------------------------------


def test_star_examples():
    assert contains_mono_star(TwoColoring.monochromatic(6), BLUE, 5)
    for color in Color:
        assert not contains_mono_star(circulant_star_coloring(3), color, 3)
    for n in range(2, 7):
        for color in Color:
            assert not contains_mono_star(split_clique_coloring(n - 1, n - 1), color, n)


def test_bistar_examples():
    for m, n in [(1, 1), (1, 3), (2, 2), (2, 4)]:
        assert contains_mono_bistar(TwoColoring.monochromatic(m + n + 2), BLUE, m, n)
    assert not contains_mono_bistar(TwoColoring.monochromatic(5), BLUE, 2, 2)
    c = split_clique_coloring(5, 2)
    for color in Color:
        assert not contains_mono_bistar(c, color, 2, 2)
        assert not contains_mono_pattern(c, color, Bistar(2, 2))


def test_bistar_rejects_partial_and_unordered():
    with pytest.raises(ValueError):
        contains_mono_bistar(TwoColoring.empty(6), BLUE, 1, 1)
    with pytest.raises(ValueError):
        contains_mono_bistar(TwoColoring.monochromatic(6), BLUE, 3, 1)


def test_pattern_examples():
    c = star_plus_edge_coloring(4)
    target = PlusEdge(Star(4), AugKind.LL)
    assert not contains_mono_pattern(c, BLUE, target)
    assert not contains_mono_pattern(c, RED, target)
    assert contains_mono_pattern(TwoColoring.monochromatic(4), BLUE,
                                 PlusEdge(Bistar(1, 1), AugKind.LL_DIFF))
    # frozen from exhaustive injection enumeration: the blue and red 5-cycles both hold P_5
    circ = circulant_star_coloring(3)
    assert contains_mono_pattern(circ, BLUE, Caterpillar((1, 0, 1)))
    assert contains_mono_pattern(circ, RED, Caterpillar((1, 0, 1)))


def test_partial_examples():
    b22 = pattern_graph(Bistar(2, 2))
    assert partial_contains_mono(_blue_only(6, b22.edges), Bistar(2, 2))
    for p in (Star(1), path(4), Bistar(3, 3), PlusEdge(Star(2), AugKind.LL)):
        assert not partial_contains_mono(TwoColoring.empty(10), p)
    # a blue S_5 has only one vertex of degree > 1
    s5 = [(0, j) for j in range(1, 6)]
    assert not partial_contains_mono(_blue_only(6, s5), Bistar(1, 3))


# -- agreement with brute force ------------------------------------------------

SMALL_PATTERNS = [Star(2), Star(3), Star(4), path(4), path(5), Bistar(1, 2), Bistar(2, 2),
                  Caterpillar((1, 0, 1)), Caterpillar((1, 1, 1)),
                  PlusEdge(Star(2), AugKind.LL), PlusEdge(Star(3), AugKind.LL),
                  PlusEdge(Bistar(1, 1), AugKind.LL_DIFF),
                  PlusEdge(Bistar(1, 1), AugKind.LEAF_FAR_CENTER),
                  PlusEdge(Bistar(1, 2), AugKind.LL_SAME, "n"),
                  PlusEdge(Bistar(1, 2), AugKind.LEAF_FAR_CENTER, "m")]


@pytest.mark.parametrize("p", SMALL_PATTERNS, ids=str)
def test_generic_embedder_matches_brute_force(p):
    pg = pattern_graph(p)
    rng = random.Random(hash(str(p)) & 0xFFFF)
    for _ in range(60):
        n = rng.randint(pg.n_vertices, 7)
        c = TwoColoring.random(n, rng, p_blue=rng.choice([0.3, 0.5, 0.7]))
        adj = c.blue_adjacency
        assert graph_contains(adj, pg) == brute_contains(adj, pg.edges, pg.n_vertices), c


@pytest.mark.parametrize("p", [Star(2), Star(3), Star(4), Bistar(1, 1), Bistar(1, 2),
                               PlusEdge(Bistar(1, 1), AugKind.LL_DIFF)], ids=str)
def test_exhaustive_k5_against_brute_force(p):
    pg = pattern_graph(p)
    for c in all_colorings(5):
        assert (contains_mono(c, BLUE, p)
                == brute_contains(c.blue_adjacency, pg.edges, pg.n_vertices))


def test_fast_paths_agree_exhaustive_k5():
    for c in all_colorings(5):
        for color in Color:
            for n in range(1, 5):
                assert contains_mono_star(c, color, n) == contains_mono_pattern(c, color, Star(n))
            for m, n in [(1, 1), (1, 2)]:
                assert (contains_mono_bistar(c, color, m, n)
                        == contains_mono_pattern(c, color, Bistar(m, n)))


@pytest.mark.parametrize("N", [6, 7, 8, 9])
def test_fast_paths_agree_random(N):
    rng = random.Random(N)
    bistars = [(m, n) for m in range(1, 4) for n in range(m, 5) if m + n + 2 <= N]
    for _ in range(300):
        c = TwoColoring.random(N, rng, p_blue=rng.uniform(0.2, 0.8))
        for color in Color:
            for s in range(2, N):
                assert contains_mono_star(c, color, s) == contains_mono_pattern(c, color, Star(s))
            for m, n in bistars:
                assert (contains_mono_bistar(c, color, m, n)
                        == contains_mono_pattern(c, color, Bistar(m, n)))


# -- properties ----------------------------------------------------------------


@st.composite
def complete_colorings(draw, lo=4, hi=8):
    n = draw(st.integers(lo, hi))
    E = n_edges(n)
    blue = draw(st.integers(0, (1 << E) - 1))
    return TwoColoring(n, blue=blue, red=((1 << E) - 1) & ~blue)


PROPERTY_PATTERNS = [Star(3), Bistar(1, 2), Bistar(2, 2), Caterpillar((1, 0, 1)),
                     PlusEdge(Bistar(1, 1), AugKind.LL_DIFF)]


@given(complete_colorings(), st.sampled_from(PROPERTY_PATTERNS), st.data())
def test_monotone_under_recolor_to_queried_color(c, p, data):
    red_edges = c.edges(RED)
    if not red_edges:
        return
    i, j = data.draw(st.sampled_from(red_edges))
    recolored = c.with_edge(i, j, BLUE)
    if contains_mono(c, BLUE, p):
        assert contains_mono(recolored, BLUE, p)


@given(complete_colorings(), st.sampled_from(PROPERTY_PATTERNS))
def test_color_symmetry(c, p):
    assert contains_mono(c, BLUE, p) == contains_mono(complement(c), RED, p)


def _lemma_violation(c, m, n):
    """True when c breaks the max-color-degree lemma or its degree-window corollary."""
    R = c.n_vertices
    has = contains_mono_bistar(c, BLUE, m, n) or contains_mono_bistar(c, RED, m, n)
    if has:
        return False
    for v in range(R):
        for color in Color:
            d = c.color_degree(v, color)
            if d >= m + n + 1 or d < R - m - n - 1:
                return True
    return False


def test_lemma_exhaustive_k6():
    # B(1,1) is the only bistar with 2m+n+2 <= 6
    assert not any(_lemma_violation(c, 1, 1) for c in all_colorings(6))


@pytest.mark.parametrize("R", [8, 9, 10])
def test_lemma_random(R):
    rng = random.Random(100 + R)
    cases = [(m, n) for m in range(1, 4) for n in range(m, 7) if 2 * m + n + 2 <= R]
    for _ in range(400):
        c = TwoColoring.random(R, rng, p_blue=rng.uniform(0.25, 0.75))
        for m, n in cases:
            assert not _lemma_violation(c, m, n)
    # random colorings are rarely bistar-free; these mostly are
    for c in near_extremal_colorings(R, 300, rng):
        for m, n in cases:
            assert not _lemma_violation(c, m, n)
