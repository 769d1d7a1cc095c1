"""Closed-form bounds on r(P) with a provenance tag per endpoint."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .patterns import (AugKind, PatternSpec, PlusEdge, Star,
                       as_bistar, as_caterpillar, as_star, pattern_graph,
                       vertex_count)

SOURCES = frozenset({
    "spine-split", "star-subgraph", "star-exact", "smallm-1", "smallm-2",
    "upper-bign", "upper-smalln", "theorem-equal", "erdos-graham", "exhaustive",
    # augmented (non-tree) patterns only
    "star-plus-edge", "base-subgraph", "clique-upper",
})


@dataclass(frozen=True)
class SpineSplit:
    m1: int
    m2: int

    @property
    def m(self) -> int:
        return min(self.m1, self.m2)


@dataclass(frozen=True)
class BoundInterval:
    lo: int
    hi: int
    lo_source: str
    hi_source: str

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        for tag in (self.lo_source, self.hi_source):
            if tag not in SOURCES:
                raise ValueError(f"unknown bound source {tag!r}")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def render(self) -> str:
        if self.exact and self.lo_source == self.hi_source:
            return f"lo={self.lo} hi={self.hi} ({self.lo_source})"
        return f"lo={self.lo} ({self.lo_source}) hi={self.hi} ({self.hi_source})"


def _best(candidates: list[tuple[int, str]], pick=max) -> tuple[int, str]:
    # ties keep the earliest listed source
    value = pick(v for v, _ in candidates)
    return next((v, s) for v, s in candidates if v == value)


def spine_split(p: PatternSpec) -> SpineSplit:
    """Sizes of the two bipartition-forced classes of a caterpillar.

    ``m1`` counts leaves on odd spine positions plus the even spine vertices,
    ``m2`` leaves on even positions plus the odd spine vertices (1-based).
    """
    leaves = as_caterpillar(p).leaves
    k = len(leaves)
    m1 = sum(leaves[0::2]) + k // 2
    m2 = sum(leaves[1::2]) + (k + 1) // 2
    return SpineSplit(m1, m2)


def caterpillar_lower(p: PatternSpec) -> int:
    return vertex_count(as_caterpillar(p)) + spine_split(p).m - 1


def star_exact(n: int) -> int:
    if n < 1:
        raise ValueError(f"star needs n >= 1, got {n}")
    return 2 * n - 1 if n % 2 == 0 else 2 * n


def erdos_graham_upper(p: PatternSpec) -> int:
    """4|E| + 1 = 4|V| - 3 for a tree."""
    if isinstance(p, PlusEdge):
        raise ValueError("the 4|V|-3 bound is for trees only")
    return 4 * vertex_count(p) - 3


def bistar_bounds(m: int, n: int) -> BoundInterval:
    if not 1 <= m <= n:
        raise ValueError(f"bistar bounds need 1 <= m <= n, got ({m}, {n})")
    if (m, n) == (1, 1):
        return BoundInterval(5, 5, "smallm-1", "smallm-1")
    if (m, n) == (2, 2):
        return BoundInterval(8, 8, "smallm-2", "smallm-2")
    if m == 1:
        # B(1, n) and S_{n+1} share their Ramsey number for n >= 2
        value = star_exact(n + 1)
        return BoundInterval(value, value, "smallm-1", "smallm-1")
    if n in (m, m + 1):
        value = 2 * m + n + 2
        return BoundInterval(value, value, "theorem-equal", "theorem-equal")
    lo, lo_src = _best([(2 * m + n + 2, "spine-split"),
                        (star_exact(n + 1), "star-subgraph")])
    uppers = [(4 * (m + n + 2) - 3, "erdos-graham")]
    if m == 2 and n >= 3:
        uppers.append((2 * n + 3, "smallm-2"))
    if m >= 3 and m + 2 <= n <= 2 * m - 1:
        uppers.append((2 * n + m + 1, "upper-bign"))
    hi, hi_src = _best(uppers, pick=min)
    return BoundInterval(lo, hi, lo_src, hi_src)


def caterpillar_bounds(p: PatternSpec) -> BoundInterval:
    cat = as_caterpillar(p)
    star = as_star(cat)
    if star is not None:
        value = star_exact(star)
        return BoundInterval(value, value, "star-exact", "star-exact")
    bi = as_bistar(cat)
    if bi is not None:
        return bistar_bounds(*bi)
    max_degree = max(pattern_graph(cat).degrees())
    lo, lo_src = _best([(caterpillar_lower(cat), "spine-split"),
                        (star_exact(max_degree), "star-subgraph")])
    return BoundInterval(lo, erdos_graham_upper(cat), lo_src, "erdos-graham")


def pattern_bounds(p: PatternSpec) -> BoundInterval:
    """Best known interval for any pattern in scope."""
    if not isinstance(p, PlusEdge):
        return caterpillar_bounds(p)
    base = caterpillar_bounds(p.base)
    lows = [(base.lo, "base-subgraph")]
    if isinstance(p.base, Star) and p.kind is AugKind.LL:
        lows.append((2 * p.base.n + 1, "star-plus-edge"))
    lo, lo_src = _best(lows)
    k = vertex_count(p)
    # every graph on k vertices sits inside K_k, and r(K_k) <= C(2k-2, k-1)
    return BoundInterval(lo, comb(2 * k - 2, k - 1), lo_src, "clique-upper")


def bistar_table(m_max: int, n_max: int) -> list[tuple[int, int, BoundInterval]]:
    return [(m, n, bistar_bounds(m, n))
            for m in range(1, m_max + 1) for n in range(m, n_max + 1)]

