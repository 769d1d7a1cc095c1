"""Print the bistar bound table, tightening rows by search where a budget allows.

    python3 scripts/bistar_table.py --max 8 --budget-nodes 2000000
"""
import argparse
import time

from treeramsey.bounds import bistar_table
from treeramsey.patterns import Bistar
from treeramsey.search import RamseyValue, SearchConfig, compute_ramsey


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=8, help="largest n (and m)")
    ap.add_argument("--budget-nodes", type=int, default=0,
                    help="per-row search budget for open rows; 0 skips search")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    print(f"{'m':>3} {'n':>3}  {'closed form':<45} search")
    for m, n, iv in bistar_table(args.max, args.max):
        note = ""
        if not iv.exact and args.budget_nodes:
            cfg = SearchConfig(node_budget=args.budget_nodes, worker_count=args.threads)
            t = time.perf_counter()
            res = compute_ramsey(Bistar(m, n), cfg)
            dt = time.perf_counter() - t
            if isinstance(res, RamseyValue):
                note = f"r = {res.value} ({res.upper_nodes} nodes, {dt:.1f}s)"
            else:
                note = f"{res.interval.render()} [{res.reason}]"
        print(f"{m:>3} {n:>3}  {iv.render():<45} {note}")


if __name__ == "__main__":
    main()
