"""Exact r(B(m,n)) by exhaustive search for a list of bistars.

Defaults cover the three cases that finish on a laptop in a few minutes:
B(2,3), B(2,4) and B(3,3). Results go to a result cache so reruns are free.

    python3 scripts/exact_bistars.py 2,4 3,3 --cache results/cache.tsv
"""
import argparse
import sys
import time

from treeramsey.bounds import bistar_bounds
from treeramsey.certificate import ResultCache
from treeramsey.patterns import Bistar
from treeramsey.search import RamseyValue, SearchConfig, compute_ramsey, decide_arrow


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("pairs", nargs="*", default=["2,3", "2,4", "3,3"], help="m,n pairs")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--budget-secs", type=float, default=3600.0)
    ap.add_argument("--cache", default=None)
    ap.add_argument("--progress", action="store_true")
    args = ap.parse_args()

    def progress(nodes, elapsed, _hist):
        print(f"  ... {nodes:,} nodes in {elapsed:.0f}s", file=sys.stderr)

    def decide(p, n, cfg):
        return decide_arrow(p, n, cfg, progress=progress if args.progress else None)
    if args.cache:
        decide = ResultCache(args.cache).wrap(decide)

    cfg = SearchConfig(worker_count=args.threads, wall_budget=args.budget_secs)
    for pair in args.pairs:
        m, n = sorted(int(x) for x in pair.split(","))
        iv = bistar_bounds(m, n)
        t = time.perf_counter()
        res = compute_ramsey(Bistar(m, n), cfg, decide=decide)
        dt = time.perf_counter() - t
        if isinstance(res, RamseyValue):
            print(f"r(B({m},{n})) = {res.value}   closed form {iv.render()}   "
                  f"K_{res.value} proof {res.upper_nodes:,} nodes, {dt:.1f}s", flush=True)
        else:
            print(f"r(B({m},{n})) open: {res.interval.render()} ({res.reason}, {dt:.1f}s)", flush=True)


if __name__ == "__main__":
    main()
