import pytest

from treeramsey.bounds import (SOURCES, BoundInterval, bistar_bounds, bistar_table,
                               caterpillar_bounds, caterpillar_lower, erdos_graham_upper,
                               pattern_bounds, spine_split, star_exact)
from treeramsey.patterns import AugKind, Bistar, Caterpillar, PlusEdge, Star, path

PAIRS = [(m, n) for m in range(1, 13) for n in range(m, 13)]


def test_spine_split_examples():
    m = spine_split(Caterpillar((2, 2, 2)))
    assert (m.m1, m.m2, m.m) == (5, 4, 4)
    for k in range(2, 12):
        assert spine_split(path(k)).m == k // 2
    for n1 in range(1, 6):
        for n2 in range(n1, 8):
            assert spine_split(Caterpillar((n1, n2))).m == n1 + 1


def test_lower_examples():
    assert caterpillar_lower(Bistar(2, 2)) == 8
    assert caterpillar_lower(path(4)) == 5
    assert caterpillar_lower(Caterpillar((2, 2, 2))) == 12
    # regular caterpillars: (3k - 1)(n + 1) / 2 for odd k
    for k in (1, 3, 5):
        for n in range(1, 5):
            assert caterpillar_lower(Caterpillar((n,) * k)) == (3 * k - 1) * (n + 1) // 2


def test_star_exact():
    assert [star_exact(n) for n in (2, 3, 4)] == [3, 6, 7]
    with pytest.raises(ValueError):
        star_exact(0)


def test_erdos_graham():
    assert erdos_graham_upper(Bistar(2, 2)) == 21
    assert erdos_graham_upper(path(4)) == 13
    assert erdos_graham_upper(Star(3)) == 13
    with pytest.raises(ValueError):
        erdos_graham_upper(PlusEdge(Star(3), AugKind.LL))


@pytest.mark.parametrize("mn,lo,hi", [((2, 2), 8, 8), ((3, 4), 12, 12), ((3, 5), 13, 14),
                                      ((2, 7), 15, 17), ((1, 4), 10, 10), ((1, 1), 5, 5)])
def test_bistar_examples(mn, lo, hi):
    iv = bistar_bounds(*mn)
    assert (iv.lo, iv.hi) == (lo, hi)


def test_render_and_tags():
    assert bistar_bounds(3, 5).render() == "lo=13 (spine-split) hi=14 (upper-bign)"
    assert bistar_bounds(2, 7).render() == "lo=15 (star-subgraph) hi=17 (smallm-2)"
    assert caterpillar_bounds(Star(4)).render() == "lo=7 hi=7 (star-exact)"
    assert caterpillar_bounds(path(6)).render() == "lo=8 (spine-split) hi=21 (erdos-graham)"
    with pytest.raises(ValueError):
        BoundInterval(1, 2, "spine-split", "made-up")
    with pytest.raises(ValueError):
        BoundInterval(3, 2, "spine-split", "spine-split")


def test_caterpillar_examples():
    assert caterpillar_bounds(Star(3)) == BoundInterval(6, 6, "star-exact", "star-exact")
    iv = caterpillar_bounds(Caterpillar((1, 0, 1)))
    assert (iv.lo, iv.hi) == (6, 17)
    assert (caterpillar_bounds(Caterpillar((2, 2))).lo,
            caterpillar_bounds(Caterpillar((2, 2))).hi) == (8, 8)


@pytest.mark.parametrize("m,n", PAIRS)
def test_bistar_invariants(m, n):
    iv = bistar_bounds(m, n)
    assert m + n + 2 <= iv.lo <= iv.hi <= 4 * (m + n + 2) - 3
    assert iv.lo_source in SOURCES and iv.hi_source in SOURCES
    if iv.lo_source == "spine-split":
        assert iv.lo == caterpillar_lower(Caterpillar((m, n)))
    assert iv.lo >= star_exact(n + 1) or (m, n) == (1, 1)
    if m >= 2 and n in (m, m + 1):
        assert iv.lo == iv.hi == 2 * m + n + 2
    if m == 2 and n >= 3:
        assert 2 * n + 1 <= iv.lo and iv.hi <= 2 * n + 3
    if m >= 3 and m + 2 <= n <= 2 * m - 1:
        assert iv.hi == 2 * n + m + 1


def test_table_covers_triangle():
    rows = bistar_table(12, 12)
    assert [(m, n) for m, n, _ in rows] == PAIRS


def test_plus_edge_bounds():
    iv = pattern_bounds(PlusEdge(Star(3), AugKind.LL))
    assert (iv.lo, iv.lo_source) == (7, "star-plus-edge")
    iv = pattern_bounds(PlusEdge(Bistar(2, 2), AugKind.LL_DIFF))
    assert (iv.lo, iv.lo_source) == (8, "base-subgraph")
    assert iv.hi_source == "clique-upper"
