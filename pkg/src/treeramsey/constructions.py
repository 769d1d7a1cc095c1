"""Explicit extremal colorings (lower-bound witnesses).

Vertex layouts are fixed so that exported certificates are reproducible:
the first block of a split-clique coloring is the first ``a`` vertices, and
in :func:`star_plus_edge_coloring` the special vertex is the last one.
"""
from __future__ import annotations

from .bounds import spine_split
from .embed import contains_mono_pattern
from .graph_core import Color, TwoColoring
from .patterns import Caterpillar, PatternSpec, as_caterpillar, vertex_count


class WitnessError(AssertionError):
    """A construction failed its own re-verification."""


def split_clique_coloring(a: int, b: int) -> TwoColoring:
    """Blue cliques on the first ``a`` and last ``b`` vertices, red between."""
    if a < 1 or b < 0:
        raise ValueError(f"need a >= 1 and b >= 0, got ({a}, {b})")
    blue = [(i, j) for j in range(a) for i in range(j)]
    blue += [(i, j) for j in range(a, a + b) for i in range(a, j)]
    return TwoColoring.from_blue_edges(a + b, blue)


def circulant_star_coloring(n: int) -> TwoColoring:
    """K_{2n-1} with {v_i, v_{i+j}} blue for j = 1..(n-1)/2 (mod 2n-1).

    Every vertex ends up with blue and red degree n-1.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"circulant coloring needs odd n >= 3, got {n}")
    order = 2 * n - 1
    blue = set()
    for i in range(order):
        for jump in range(1, (n - 1) // 2 + 1):
            u, v = i, (i + jump) % order
            blue.add((min(u, v), max(u, v)))
    return TwoColoring.from_blue_edges(order, sorted(blue))


def star_plus_edge_coloring(n: int) -> TwoColoring:
    """K_{2n} on U (n vertices), W (n-1 vertices) and a last vertex v.

    Blue: inside U, inside W, and v-W. Red: v-U and U-W. The blue graph is
    two disjoint K_n, the red graph is K_{n,n}, so no color holds S_n + e.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    U = range(n)
    W = range(n, 2 * n - 1)
    v = 2 * n - 1
    blue = [(i, j) for j in U for i in U if i < j]
    blue += [(i, j) for j in W for i in W if i < j]
    blue += [(w, v) for w in W]
    return TwoColoring.from_blue_edges(2 * n, blue)


def avoids_both_colors(c: TwoColoring, p: PatternSpec) -> bool:
    return not any(contains_mono_pattern(c, color, p) for color in Color)


def lower_bound_witness(p: PatternSpec, verify: bool = True) -> TwoColoring:
    """Split-clique coloring of K_{|V|+m-2} avoiding ``p`` in both colors.

    ``m`` is the smaller of the two alternating spine-class sizes. The result
    is re-checked with the generic embedder and a :class:`WitnessError` is
    raised if it contains the pattern.
    """
    cat: Caterpillar = as_caterpillar(p)
    m = spine_split(cat).m
    c = split_clique_coloring(vertex_count(cat) - 1, m - 1)
    if verify and not avoids_both_colors(c, cat):
        raise WitnessError(f"split-clique witness for {cat} contains the pattern")
    return c
