"""Certificate files and the on-disk result cache.

Certificate format (line oriented, frozen)::

    ramsey-certificate v1
    claim no-mono <pattern-expr>          | claim arrow <pattern-expr> <N>
    n <N>
    blue <i-j> <i-j> ...                  | search nodes=<k> prune=<on|off> symmetry=<on|off>
    [machine-assisted]                    (arrow claims only)
    [# free-text note lines]

For ``no-mono`` claims every unlisted edge is red; blue pairs are written with
i < j in linear edge-index order. ``arrow`` claims record search statistics and
cannot be checked without repeating the search.
"""
from __future__ import annotations

import datetime
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .embed import contains_mono_pattern
from .graph_core import Color, TwoColoring, to_linear
from .patterns import PatternError, PatternSpec, format_pattern, parse_pattern, vertex_count
from .search import AllColoringsContain, Counterexample, SearchOutcome

log = logging.getLogger(__name__)

HEADER = "ramsey-certificate v1"
MACHINE_ASSISTED = "machine-assisted"


class CertificateError(ValueError):
    """``kind`` is one of malformed, order-mismatch, claim-mismatch."""

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


@dataclass
class Certificate:
    claim: str  # "no-mono" or "arrow"
    pattern: PatternSpec
    n: int
    coloring: TwoColoring | None = None
    stats: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @classmethod
    def no_mono(cls, pattern: PatternSpec, coloring: TwoColoring, notes=()) -> "Certificate":
        return cls("no-mono", pattern, coloring.n_vertices, coloring, notes=list(notes))

    @classmethod
    def arrow(cls, pattern: PatternSpec, n: int, nodes: int, prune: bool, symmetry: bool,
              notes=()) -> "Certificate":
        stats = {"nodes": str(nodes), "prune": "on" if prune else "off",
                 "symmetry": "on" if symmetry else "off"}
        return cls("arrow", pattern, n, stats=stats, notes=list(notes))

    def emit(self) -> str:
        expr = format_pattern(self.pattern)
        if self.claim == "no-mono":
            pairs = sorted(self.coloring.edges(Color.BLUE), key=lambda e: to_linear(*e))
            lines = [HEADER, f"claim no-mono {expr}", f"n {self.n}",
                     " ".join(["blue"] + [f"{i}-{j}" for i, j in pairs])]
        else:
            stats = " ".join(f"{k}={v}" for k, v in self.stats.items())
            lines = [HEADER, f"claim arrow {expr} {self.n}", f"n {self.n}",
                     f"search {stats}".rstrip(), MACHINE_ASSISTED]
        lines += [f"# {note}" if note else "#" for note in self.notes]
        return "\n".join(lines) + "\n"


def _pair(token: str, n: int) -> tuple[int, int]:
    try:
        a, b = token.split("-")
        i, j = int(a), int(b)
    except ValueError:
        raise CertificateError("malformed", f"bad edge token {token!r}") from None
    if not 0 <= i < j:
        raise CertificateError("malformed", f"edge {token!r} must satisfy 0 <= i < j")
    if j >= n:
        raise CertificateError("order-mismatch", f"edge {token!r} outside K_{n}")
    return i, j


def parse_certificate(text: str) -> Certificate:
    if not text.endswith("\n"):
        raise CertificateError("malformed", "file is truncated (no final newline)")
    lines = text[:-1].split("\n")
    if len(lines) < 4 or lines[0] != HEADER:
        raise CertificateError("malformed", f"expected {HEADER!r} and at least 4 lines")
    claim_tokens = lines[1].split()
    if len(claim_tokens) < 3 or claim_tokens[0] != "claim" or claim_tokens[1] not in ("no-mono", "arrow"):
        raise CertificateError("malformed", f"bad claim line {lines[1]!r}")
    kind = claim_tokens[1]
    pattern_tokens = claim_tokens[2:]
    claimed_n = None
    if kind == "arrow":
        try:
            claimed_n = int(pattern_tokens[-1])
        except ValueError:
            raise CertificateError("malformed", "arrow claim must end with the order N") from None
        pattern_tokens = pattern_tokens[:-1]
    try:
        pattern = parse_pattern(pattern_tokens)
    except PatternError as exc:
        raise CertificateError("malformed", str(exc)) from None
    n_tokens = lines[2].split()
    if len(n_tokens) != 2 or n_tokens[0] != "n" or not n_tokens[1].isdigit():
        raise CertificateError("malformed", f"bad order line {lines[2]!r}")
    n = int(n_tokens[1])
    if claimed_n is not None and claimed_n != n:
        raise CertificateError("order-mismatch", f"claim says K_{claimed_n}, order line says K_{n}")
    body = lines[3:]
    if kind == "no-mono":
        tokens = body[0].split()
        if not tokens or tokens[0] != "blue":
            raise CertificateError("malformed", f"bad blue line {body[0]!r}")
        pairs = [_pair(tok, n) for tok in tokens[1:]]
        if len(set(pairs)) != len(pairs):
            raise CertificateError("malformed", "repeated blue edge")
        cert = Certificate("no-mono", pattern, n, TwoColoring.from_blue_edges(n, pairs))
        rest = body[1:]
    else:
        tokens = body[0].split()
        if not tokens or tokens[0] != "search":
            raise CertificateError("malformed", f"bad search line {body[0]!r}")
        try:
            stats = dict(tok.split("=", 1) for tok in tokens[1:])
        except ValueError:
            raise CertificateError("malformed", f"bad search line {body[0]!r}") from None
        if len(body) < 2 or body[1] != MACHINE_ASSISTED:
            raise CertificateError("malformed", "arrow claims must be marked machine-assisted")
        cert = Certificate("arrow", pattern, n, stats=stats)
        rest = body[2:]
    for line in rest:
        if not line.startswith("#"):
            raise CertificateError("malformed", f"unexpected line {line!r}")
        cert.notes.append(line[2:] if line.startswith("# ") else line[1:])
    return cert


def verify_certificate(cert: Certificate) -> str:
    """Re-check a no-mono claim with the generic embedder.

    Returns a one-line verdict; raises :class:`CertificateError` when the claim
    does not hold. Arrow claims are reported as machine-assisted only.
    """
    if cert.claim == "arrow":
        return (f"machine-assisted: K_{cert.n} -> {format_pattern(cert.pattern)} "
                f"was claimed by search ({cert.stats.get('nodes', '?')} nodes); not independently checkable")
    if vertex_count(cert.pattern) > cert.n:
        note = " (pattern larger than K_n; trivially true)"
    else:
        note = ""
    for color in Color:
        if contains_mono_pattern(cert.coloring, color, cert.pattern):
            raise CertificateError(
                "claim-mismatch",
                f"the {color.value} class of K_{cert.n} contains {format_pattern(cert.pattern)}")
    return f"valid: K_{cert.n} coloring has no monochromatic {format_pattern(cert.pattern)}{note}"


def read_certificate(path: str | Path) -> Certificate:
    return parse_certificate(Path(path).read_text())


def write_certificate(path: str | Path, cert: Certificate) -> None:
    Path(path).write_text(cert.emit())


# -- cache ---------------------------------------------------------------------


class ResultCache:
    """Append-only record of proven classifications keyed by (pattern, N).

    Line format, tab separated: ``pattern  N  classification  nodes  date
    [blue-edges]``. Counterexample records keep their blue edge list so the
    coloring can be re-emitted; it is re-verified on load.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.entries: dict[tuple[str, int], SearchOutcome] = {}
        self.hits = 0
        if self.path.exists():
            self._load()

    def _load(self):
        for lineno, line in enumerate(self.path.read_text().splitlines(), 1):
            if not line.strip():
                continue
            try:
                key, outcome = self._parse_line(line)
            except (ValueError, PatternError) as exc:
                log.warning("%s:%d: skipping corrupt cache line (%s)", self.path, lineno, exc)
                continue
            self.entries[key] = outcome

    @staticmethod
    def _parse_line(line: str):
        fields = line.split("\t")
        if len(fields) not in (5, 6):
            raise ValueError("wrong field count")
        expr, n_text, cls, nodes_text, _date = fields[:5]
        pattern = parse_pattern(expr)
        n, nodes = int(n_text), int(nodes_text)
        if cls == "arrow":
            return (format_pattern(pattern), n), AllColoringsContain(nodes)
        if cls == "counterexample" and len(fields) == 6:
            pairs = [_pair(tok, n) for tok in fields[5].split()]
            coloring = TwoColoring.from_blue_edges(n, pairs)
            if any(contains_mono_pattern(coloring, color, pattern) for color in Color):
                raise ValueError("stored counterexample does not verify")
            return (format_pattern(pattern), n), Counterexample(coloring, nodes)
        raise ValueError(f"unknown classification {cls!r}")

    def get(self, p: PatternSpec, n: int) -> SearchOutcome | None:
        out = self.entries.get((format_pattern(p), n))
        if out is not None:
            self.hits += 1
        return out

    def put(self, p: PatternSpec, n: int, outcome: SearchOutcome) -> None:
        if not isinstance(outcome, (AllColoringsContain, Counterexample)):
            return
        key = (format_pattern(p), n)
        if key in self.entries:
            return
        fields = [key[0], str(n), "", str(outcome.nodes_explored),
                  datetime.date.today().isoformat()]
        if isinstance(outcome, AllColoringsContain):
            fields[2] = "arrow"
        else:
            fields[2] = "counterexample"
            fields.append(" ".join(f"{i}-{j}" for i, j in outcome.coloring.edges(Color.BLUE)))
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write("\t".join(fields) + "\n")
        self.entries[key] = outcome

    def wrap(self, decide):
        """A decide function that consults the cache first and records proofs."""
        def cached(p, n, cfg):
            hit = self.get(p, n)
            if hit is not None:
                return hit
            out = decide(p, n, cfg)
            self.put(p, n, out)
            return out
        return cached
