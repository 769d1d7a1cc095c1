"""Brute-force reference procedures, independent of the package's search paths."""
from __future__ import annotations

import itertools

from treeramsey.graph_core import TwoColoring, n_edges


def edge_set(adj) -> set[frozenset]:
    return {frozenset((u, v)) for u in range(len(adj)) for v in range(u + 1, len(adj))
            if adj[u] >> v & 1}


def brute_contains(target_adj, pattern_edges, k: int) -> bool:
    """Try every injective vertex map; O(n^k)."""
    targets = edge_set(target_adj)
    n = len(target_adj)
    if k > n:
        return False
    for image in itertools.permutations(range(n), k):
        if all(frozenset((image[a], image[b])) in targets for a, b in pattern_edges):
            return True
    return False


def all_colorings(n: int):
    full = (1 << n_edges(n)) - 1
    for blue in range(1 << n_edges(n)):
        yield TwoColoring(n, blue=blue, red=full & ~blue)


def brute_arrow(pattern_edges, k: int, n: int) -> bool:
    """Every coloring of K_n has a monochromatic copy (full enumeration)."""
    for c in all_colorings(n):
        if not (brute_contains(c.blue_adjacency, pattern_edges, k)
                or brute_contains(c.red_adjacency, pattern_edges, k)):
            return False
    return True


def canonical_form(n: int, edges) -> tuple:
    """Lexicographically least sorted edge list over all relabelings."""
    best = None
    for perm in itertools.permutations(range(n)):
        form = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or form < best:
            best = form
    return best


def nonedge_classes(n: int, edges) -> int:
    """Number of isomorphism classes of G + e over the non-edges e of G."""
    present = {frozenset(e) for e in edges}
    forms = set()
    for a in range(n):
        for b in range(a + 1, n):
            if frozenset((a, b)) not in present:
                forms.add(canonical_form(n, list(edges) + [(a, b)]))
    return len(forms)
