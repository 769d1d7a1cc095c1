"""Command-line front end.

Exit codes: 0 proven / valid, 1 counterexample (or contradiction), 2 inconclusive,
3 usage or pattern error, 4 malformed certificate, 5 order mismatch,
6 claim mismatch.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .bounds import bistar_table, pattern_bounds
from .certificate import (Certificate, CertificateError, ResultCache, read_certificate,
                          verify_certificate, write_certificate)
from .constructions import (avoids_both_colors, circulant_star_coloring,
                            lower_bound_witness, split_clique_coloring,
                            star_plus_edge_coloring)
from .graph_core import Color
from .patterns import (AugKind, Bistar, PatternError, PlusEdge, Star, as_star,
                       format_pattern, parse_pattern)
from .saturation import Verdict, verify_bistar_unsaturated, verify_star_saturated
from .search import (AllColoringsContain, BudgetExhausted, Counterexample, RamseyValue,
                     SearchConfig, compute_ramsey, decide_arrow)

EXIT_PROVEN, EXIT_COUNTEREXAMPLE, EXIT_INCONCLUSIVE = 0, 1, 2
EXIT_USAGE, EXIT_MALFORMED, EXIT_ORDER, EXIT_CLAIM = 3, 4, 5, 6
_CERT_EXIT = {"malformed": EXIT_MALFORMED, "order-mismatch": EXIT_ORDER,
              "claim-mismatch": EXIT_CLAIM}


class UsageError(Exception):
    pass


def _config(args) -> SearchConfig:
    return SearchConfig(
        node_budget=args.budget_nodes, wall_budget=args.budget_secs,
        worker_count=args.threads,
        prune_degree=not args.no_prune, prune_maxdeg_lemma=not args.no_prune,
        symmetry_color_swap=not args.no_symmetry, symmetry_first_vertex=not args.no_symmetry)


def _decider(args):
    progress = None
    if args.progress:
        def progress(nodes, elapsed, hist):
            deepest = max((d for d, c in enumerate(hist) if c), default=0)
            rate = nodes / elapsed if elapsed else 0.0
            print(f"[progress] {nodes} nodes, {rate:,.0f} nodes/s, deepest edge {deepest}",
                  file=sys.stderr)

    def decide(p, n, cfg):
        return decide_arrow(p, n, cfg, progress=progress)
    if args.cache:
        return ResultCache(args.cache).wrap(decide)
    return decide


def _pattern(tokens):
    try:
        return parse_pattern(tokens)
    except PatternError as exc:
        raise UsageError(str(exc)) from None


def _render_coloring(c) -> str:
    pairs = " ".join(f"{i}-{j}" for i, j in c.edges(Color.BLUE))
    return f"K_{c.n_vertices} blue edges: {pairs or '(none)'} (all others red)"


def _cert_paths(base: str):
    path = Path(base)
    return (path.with_name(f"{path.stem}-lower{path.suffix or '.cert'}"),
            path.with_name(f"{path.stem}-upper{path.suffix or '.cert'}"))


# -- commands --------------------------------------------------------------------


def cmd_bounds(args) -> int:
    if args.table:
        m_max, n_max = args.table
        print(f"{'m':>3} {'n':>3}  interval")
        for m, n, iv in bistar_table(m_max, n_max):
            print(f"{m:>3} {n:>3}  {iv.render()}")
        return EXIT_PROVEN
    if not args.pattern:
        raise UsageError("bounds needs a pattern or --table M N")
    p = _pattern(args.pattern)
    print(pattern_bounds(p).render())
    return EXIT_PROVEN


def cmd_decide(args) -> int:
    if len(args.pattern) < 2:
        raise UsageError("decide needs a pattern followed by N")
    p = _pattern(args.pattern[:-1])
    try:
        n = int(args.pattern[-1])
    except ValueError:
        raise UsageError(f"N must be an integer, got {args.pattern[-1]!r}") from None
    cfg = _config(args)
    out = _decider(args)(p, n, cfg)
    expr = format_pattern(p)
    if isinstance(out, AllColoringsContain):
        print(f"AllColoringsContain: every 2-coloring of K_{n} has a monochromatic {expr} "
              f"({out.nodes_explored} nodes)")
        if args.cert_out:
            write_certificate(args.cert_out, Certificate.arrow(
                p, n, out.nodes_explored, cfg.prune_degree, cfg.symmetry_color_swap))
        return EXIT_PROVEN
    if isinstance(out, Counterexample):
        print(f"Counterexample: {_render_coloring(out.coloring)}")
        if args.cert_out:
            write_certificate(args.cert_out, Certificate.no_mono(p, out.coloring))
        return EXIT_COUNTEREXAMPLE
    print(f"INCONCLUSIVE: budget exhausted ({out.reason}) after {out.nodes_explored} nodes")
    return EXIT_INCONCLUSIVE


def cmd_compute(args) -> int:
    p = _pattern(args.pattern)
    cfg = _config(args)
    res = compute_ramsey(p, cfg, decide=_decider(args))
    if isinstance(res, RamseyValue):
        print(f"r = {res.value}")
        print(f"  lower: K_{res.value - 1} counterexample, "
              f"{_render_coloring(res.lower_certificate)}")
        print(f"  upper: K_{res.value} exhaustive ({res.upper_nodes} nodes)")
        if args.cert_out:
            lower, upper = _cert_paths(args.cert_out)
            write_certificate(lower, Certificate.no_mono(p, res.lower_certificate))
            write_certificate(upper, Certificate.arrow(
                p, res.value, res.upper_nodes, cfg.prune_degree, cfg.symmetry_color_swap))
            print(f"  certificates: {lower} {upper}")
        return EXIT_PROVEN
    print(f"INCONCLUSIVE: {res.reason}; bounded only: {res.interval.render()}")
    return EXIT_INCONCLUSIVE


def witness_for(p):
    """The standard lower-bound coloring for ``p``."""
    if isinstance(p, PlusEdge):
        if isinstance(p.base, Star) and p.kind is AugKind.LL:
            return star_plus_edge_coloring(p.base.n)
        raise UsageError("no construction for this augmented pattern")
    star = as_star(p)
    if star is not None and star >= 2:
        if star % 2:
            return circulant_star_coloring(star)
        return split_clique_coloring(star - 1, star - 1)
    return lower_bound_witness(p)


def cmd_witness(args) -> int:
    p = _pattern(args.pattern)
    c = witness_for(p)
    ok = avoids_both_colors(c, p)
    status = "verified" if ok else "FAILED"
    print(f"witness K_{c.n_vertices} for {format_pattern(p)}: {status}")
    print(f"  {_render_coloring(c)}")
    if args.cert_out:
        write_certificate(args.cert_out, Certificate.no_mono(p, c))
    return EXIT_PROVEN if ok else EXIT_CLAIM


def cmd_saturate(args) -> int:
    p = _pattern(args.pattern)
    cfg = _config(args)
    if isinstance(p, Star):
        report = verify_star_saturated(p.n, cfg)
    elif isinstance(p, Bistar):
        try:
            report = verify_bistar_unsaturated(p.m, p.n, cfg, decide=_decider(args))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError("saturate takes 'star n' or 'bistar m n'")
    print(report.render())
    if args.cert_out and report.coloring is not None:
        target = PlusEdge(p, AugKind.LL) if isinstance(p, Star) else PlusEdge(p, AugKind.LL_DIFF)
        notes = report.render().splitlines()
        write_certificate(args.cert_out, Certificate.no_mono(target, report.coloring, notes))
    return {Verdict.CONFIRMS: EXIT_PROVEN, Verdict.CONTRADICTS: EXIT_COUNTEREXAMPLE,
            Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE}[report.verdict]


def cmd_verify(args) -> int:
    try:
        cert = read_certificate(args.certificate)
        message = verify_certificate(cert)
    except CertificateError as exc:
        print(f"invalid: {exc}")
        return _CERT_EXIT[exc.kind]
    except OSError as exc:
        print(f"invalid: malformed: cannot read {args.certificate}: {exc}")
        return EXIT_MALFORMED
    if cert.claim == "arrow":
        if not args.recheck:
            print(message)
            return EXIT_INCONCLUSIVE
        out = decide_arrow(cert.pattern, cert.n, _config(args))
        if isinstance(out, AllColoringsContain):
            print(f"valid: re-run search proves K_{cert.n} -> {format_pattern(cert.pattern)}")
            return EXIT_PROVEN
        if isinstance(out, Counterexample):
            print(f"invalid: claim-mismatch: search found {_render_coloring(out.coloring)}")
            return EXIT_CLAIM
        print("INCONCLUSIVE: re-run exhausted its budget")
        return EXIT_INCONCLUSIVE
    print(message)
    return EXIT_PROVEN


# -- parser ----------------------------------------------------------------------


def _add_search_flags(sp):
    sp.add_argument("--budget-nodes", type=int, default=10**10)
    sp.add_argument("--budget-secs", type=float, default=1800.0)
    sp.add_argument("--threads", type=int, default=1, help="worker processes")
    sp.add_argument("--no-prune", action="store_true", help="disable degree-window pruning")
    sp.add_argument("--no-symmetry", action="store_true", help="disable symmetry breaking")
    sp.add_argument("--cache", metavar="PATH", help="result cache file")
    sp.add_argument("--cert-out", metavar="PATH", help="write certificate(s) here")
    sp.add_argument("--progress", action="store_true", help="report search progress on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treeramsey",
        description="Ramsey numbers of stars, bistars and caterpillars.",
        epilog="pattern grammar: star N | bistar M N | caterpillar N1 .. NK | path K "
               "| <base> +e {ll-same|ll-diff|leaf-far-center|ll} [m|n]")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("bounds", help="closed-form bound interval")
    sp.add_argument("pattern", nargs="*")
    sp.add_argument("--table", nargs=2, type=int, metavar=("M_MAX", "N_MAX"),
                    help="print the bistar bound table")
    sp.set_defaults(func=cmd_bounds)

    for name, func, text in [("decide", cmd_decide, "decide K_N -> (P,P); pattern then N"),
                             ("compute", cmd_compute, "exact Ramsey number by search"),
                             ("saturate", cmd_saturate, "saturation audit for a star or bistar")]:
        sp = sub.add_parser(name, help=text)
        sp.add_argument("pattern", nargs="+")
        _add_search_flags(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("witness", help="emit and verify a lower-bound construction")
    sp.add_argument("pattern", nargs="+")
    sp.add_argument("--cert-out", metavar="PATH")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("verify", help="re-check a certificate file")
    sp.add_argument("certificate")
    sp.add_argument("--recheck", action="store_true", help="re-run the search for arrow claims")
    _add_search_flags(sp)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
