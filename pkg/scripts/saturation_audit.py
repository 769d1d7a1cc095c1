"""Saturation audit: stars, the cross-center leaf edge, and every other augmentation class.

For each small bistar B with known r = r(B) this decides K_r -> (B+e, B+e)
for every non-edge class e, so the output shows which single-edge
supergraphs keep the Ramsey number and which raise it.
"""
import argparse

from treeramsey.patterns import Bistar, format_pattern
from treeramsey.saturation import (augmentations, bistar_ramsey, verify_bistar_unsaturated,
                                   verify_star_saturated)
from treeramsey.search import SearchConfig, decide_arrow


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--stars", type=int, default=8)
    ap.add_argument("--bistars", nargs="*", default=["1,1", "1,2", "1,3", "2,2", "2,3"])
    args = ap.parse_args()
    cfg = SearchConfig()

    for n in range(2, args.stars + 1):
        print(verify_star_saturated(n, cfg).render())
    print()
    for pair in args.bistars:
        m, n = sorted(int(x) for x in pair.split(","))
        print(verify_bistar_unsaturated(m, n, cfg).render())
        r, _ = bistar_ramsey(m, n, cfg)
        for aug in augmentations(Bistar(m, n)):
            out = decide_arrow(aug, r, cfg)
            keeps = "keeps r" if type(out).__name__ == "AllColoringsContain" else "raises r"
            print(f"    K_{r}: {format_pattern(aug):<36} {type(out).__name__:<20} {keeps}")
        print()


if __name__ == "__main__":
    main()
