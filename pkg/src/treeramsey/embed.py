"""Monochromatic-copy detection.

Two independent routes:

* closed-form checks for stars (a color degree reaches n) and bistars (a
  Hall-type condition on the two center neighborhoods);
* a generic backtracking embedder (:func:`find_embedding`) for any small
  pattern graph, used as the oracle for the closed forms and as the only route
  for caterpillars with k >= 3 and for augmented patterns.

Containment is ordinary (non-induced) subgraph containment. Target graphs are
given as lists of vertex bitmasks.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graph_core import Color, TwoColoring
from .patterns import PatternGraph, PatternSpec, as_bistar, as_star, pattern_graph


# -- closed forms ------------------------------------------------------------


def graph_has_star(adj: Sequence[int], n: int) -> bool:
    return any(x.bit_count() >= n for x in adj)


def _center_edge_holds(adj: Sequence[int], u: int, v: int, m: int, n: int) -> bool:
    a = adj[u] & ~(1 << v)
    b = adj[v] & ~(1 << u)
    ca, cb = a.bit_count(), b.bit_count()
    if not ((ca >= m and cb >= n) or (ca >= n and cb >= m)):
        return False
    return (a | b).bit_count() >= m + n


def graph_has_bistar(adj: Sequence[int], m: int, n: int) -> bool:
    """True iff the graph contains B(m, n) (centers joined by an edge)."""
    need = m + 1
    for u, nb in enumerate(adj):
        if nb.bit_count() < need:
            continue
        rest = nb >> (u + 1)
        v = u + 1
        while rest:
            if rest & 1 and _center_edge_holds(adj, u, v, m, n):
                return True
            rest >>= 1
            v += 1
    return False


def bistar_at(adj: Sequence[int], x: int, m: int, n: int) -> bool:
    """True iff some copy of B(m, n) has ``x`` as a center."""
    rest, v = adj[x], 0
    while rest:
        if rest & 1 and _center_edge_holds(adj, x, v, m, n):
            return True
        rest >>= 1
        v += 1
    return False


def contains_mono_star(c: TwoColoring, color: Color, n: int) -> bool:
    return graph_has_star(c.adjacency(color), n)


def contains_mono_bistar(c: TwoColoring, color: Color, m: int, n: int) -> bool:
    if not c.is_complete():
        raise ValueError("contains_mono_bistar needs a complete coloring; "
                         "use partial_contains_mono for partial ones")
    if not 1 <= m <= n:
        raise ValueError(f"bistar needs 1 <= m <= n, got ({m}, {n})")
    return graph_has_bistar(c.adjacency(color), m, n)


# -- generic embedder ----------------------------------------------------------


@dataclass(frozen=True)
class _Step:
    vertex: int
    placed_neighbors: tuple[int, ...]
    degree: int


@dataclass(frozen=True)
class _Plan:
    steps: tuple[_Step, ...]
    # (parent pattern vertex, number of pendant leaves) for the Hall phase
    groups: tuple[tuple[int, int], ...]


def _make_plan(pg: PatternGraph, adj: tuple[int, ...], placed: tuple[int, ...]) -> _Plan:
    deg = [x.bit_count() for x in adj]
    k = pg.n_vertices
    placed_set = set(placed)
    # pendant leaves hanging off a non-pendant vertex go to the Hall phase
    tail = set()
    for x in range(k):
        if x in placed_set or deg[x] != 1:
            continue
        parent = adj[x].bit_length() - 1
        if deg[parent] >= 2 or parent in placed_set:
            tail.add(x)
    order: list[int] = []
    done = set(placed)
    remaining = [x for x in range(k) if x not in done and x not in tail]
    while remaining:
        def rank(x: int):
            links = sum(1 for w in done if adj[x] >> w & 1)
            return (-links, -deg[x], x)
        best = min(remaining, key=rank)
        order.append(best)
        done.add(best)
        remaining.remove(best)
    seen: set[int] = set(placed)
    steps = []
    for x in order:
        nbrs = tuple(w for w in sorted(seen) if adj[x] >> w & 1)
        steps.append(_Step(x, nbrs, deg[x]))
        seen.add(x)
    counts: dict[int, int] = {}
    for x in sorted(tail):
        parent = adj[x].bit_length() - 1
        counts[parent] = counts.get(parent, 0) + 1
    return _Plan(tuple(steps), tuple(sorted(counts.items())))


@lru_cache(maxsize=4096)
def _plan_for(pg: PatternGraph, placed: tuple[int, ...]) -> _Plan:
    return _make_plan(pg, tuple(pg.adjacency()), placed)


@lru_cache(maxsize=512)
def _pattern_info(pg: PatternGraph):
    adj = tuple(pg.adjacency())
    deg = tuple(x.bit_count() for x in adj)
    root = max(range(pg.n_vertices), key=lambda x: (deg[x], -x)) if pg.n_vertices else 0
    return adj, deg, root


def _hall_ok(tadj: Sequence[int], phi: list[int], used: int, groups) -> bool:
    """Can every group draw its pendant leaves disjointly from unused neighbors?"""
    g = len(groups)
    if g == 0:
        return True
    avail = [tadj[phi[p]] & ~used for p, _ in groups]
    need = [c for _, c in groups]
    if g == 1:
        return avail[0].bit_count() >= need[0]
    union = [0] * (1 << g)
    total = [0] * (1 << g)
    for s in range(1, 1 << g):
        low = s & -s
        i = low.bit_length() - 1
        union[s] = union[s ^ low] | avail[i]
        total[s] = total[s ^ low] + need[i]
        if union[s].bit_count() < total[s]:
            return False
    return True


def _extend(tadj, tdeg, full, plan: _Plan, phi: list[int], used: int) -> bool:
    steps = plan.steps
    depth = len(steps)

    def go(idx: int, used: int) -> bool:
        if idx == depth:
            return _hall_ok(tadj, phi, used, plan.groups)
        step = steps[idx]
        cand = full & ~used
        for w in step.placed_neighbors:
            cand &= tadj[phi[w]]
        need = step.degree
        x = step.vertex
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if tdeg[v] < need:
                continue
            phi[x] = v
            if go(idx + 1, used | low):
                return True
        phi[x] = -1
        return False

    return go(0, used)


def _component_sizes_ok(tadj: Sequence[int], order: int) -> bool:
    """Some connected component has at least ``order`` vertices."""
    n = len(tadj)
    unseen = (1 << n) - 1
    while unseen:
        start = unseen & -unseen
        comp = frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = tadj[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        if comp.bit_count() >= order:
            return True
        unseen &= ~comp
    return False


def find_embedding(pg: PatternGraph, tadj: Sequence[int],
                   anchor: tuple[int, int] | None = None) -> list[int] | None:
    """Injective map pattern vertex -> target vertex preserving edges, or None.

    With ``anchor=(a, b)`` only embeddings that use the target edge {a, b} are
    considered. The pattern must be connected.
    """
    k = pg.n_vertices
    n = len(tadj)
    if k == 0:
        return []
    if k > n:
        return None
    padj, pdeg, root = _pattern_info(pg)
    tdeg = [x.bit_count() for x in tadj]
    full = (1 << n) - 1
    if anchor is None:
        if sum(tdeg) // 2 < pg.n_edges or not _component_sizes_ok(tadj, k):
            return None
        plan = _plan_for(pg, (root,))
        for v in range(n):
            if tdeg[v] < pdeg[root]:
                continue
            phi = [-1] * k
            phi[root] = v
            if _extend(tadj, tdeg, full, plan, phi, 1 << v):
                return phi
        return None
    a, b = anchor
    if not tadj[a] >> b & 1:
        return None
    for x, y in pg.edges:
        for px, py in ((x, y), (y, x)):
            if tdeg[a] < pdeg[px] or tdeg[b] < pdeg[py]:
                continue
            phi = [-1] * k
            phi[px], phi[py] = a, b
            plan = _plan_for(pg, (px, py))
            if _extend(tadj, tdeg, full, plan, phi, (1 << a) | (1 << b)):
                return phi
    return None


def graph_contains(tadj: Sequence[int], p: PatternSpec | PatternGraph) -> bool:
    pg = p if isinstance(p, PatternGraph) else pattern_graph(p)
    return find_embedding(pg, tadj) is not None


def contains_mono_pattern(c: TwoColoring, color: Color, p: PatternSpec) -> bool:
    """Generic route: backtracking embedding into the ``color`` class of ``c``.

    Works on partial colorings too (only colored edges count).
    """
    return graph_contains(c.adjacency(color), p)


def contains_mono(c: TwoColoring, color: Color, p: PatternSpec) -> bool:
    """Dispatching check: closed forms for stars and bistars, else the embedder."""
    adj = c.adjacency(color)
    star = as_star(p)
    if star is not None:
        return graph_has_star(adj, star)
    bi = as_bistar(p)
    if bi is not None:
        return graph_has_bistar(adj, *bi)
    return graph_contains(adj, p)


def partial_contains_mono(c: TwoColoring, p: PatternSpec) -> bool:
    """Does either color class, restricted to colored edges, contain ``p``?

    Sound for pruning: colored edges never change, so a true result survives
    every extension of ``c``.
    """
    return any(contains_mono(c, color, p) for color in Color)


def edge_completes(adj: Sequence[int], p: PatternSpec, pg: PatternGraph,
                   a: int, b: int) -> bool:
    """Does some copy of ``p`` in ``adj`` use the edge {a, b}?

    Used by the search after coloring {a, b}: the graph before was free of
    ``p``, so any new copy must pass through this edge.
    """
    star = as_star(p)
    if star is not None:
        return adj[a].bit_count() >= star or adj[b].bit_count() >= star
    bi = as_bistar(p)
    if bi is not None:
        m, n = bi
        # a new copy has a or b as a center
        return bistar_at(adj, a, m, n) or bistar_at(adj, b, m, n)
    return find_embedding(pg, adj, anchor=(a, b)) is not None
