"""Exhaustive check of the max-color-degree lemma and degree window on K_N.

Every bistar-free 2-coloring of K_N (N >= 2m+n+2) must keep each color
degree inside [N-m-n-1, m+n]. N=7 enumerates all 2^21 colorings.
"""
import argparse
import time

from treeramsey.embed import graph_has_bistar
from treeramsey.graph_core import TwoColoring, n_edges


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("N", type=int, nargs="?", default=7)
    args = ap.parse_args()
    N = args.N
    cases = [(m, n) for m in range(1, N) for n in range(m, N) if 2 * m + n + 2 <= N]
    full = (1 << n_edges(N)) - 1
    violations = {mn: 0 for mn in cases}
    free = {mn: 0 for mn in cases}
    t = time.perf_counter()
    for blue in range(1 << n_edges(N)):
        c = TwoColoring(N, blue=blue, red=full & ~blue)
        adj_b, adj_r = c.blue_adjacency, c.red_adjacency
        degs = [x.bit_count() for x in adj_b]
        lo_deg, hi_deg = min(degs), max(degs)
        for m, n in cases:
            if graph_has_bistar(adj_b, m, n) or graph_has_bistar(adj_r, m, n):
                continue
            free[(m, n)] += 1
            # red degree is N-1-blue, so both colors sit in the window iff blue does
            if hi_deg > m + n or lo_deg < N - m - n - 1:
                violations[(m, n)] += 1
    dt = time.perf_counter() - t
    for mn in cases:
        print(f"B{mn} on K_{N}: {free[mn]} bistar-free colorings, {violations[mn]} violations")
    print(f"{1 << n_edges(N)} colorings in {dt:.1f}s; total violations {sum(violations.values())}")


if __name__ == "__main__":
    main()
