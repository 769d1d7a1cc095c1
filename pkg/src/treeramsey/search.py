"""Exhaustive decision of K_N -> (P, P) and exact Ramsey numbers.

The search colors the edges of K_N in vertex-extension order (every edge from
vertex t back to 0..t-1 before vertex t+1 appears), blue before red. A branch
is cut when

* the edge just colored completes a monochromatic copy of P (any copy must
  pass through that edge, since the coloring before it was P-free);
* a color degree exceeds a cap. For a star S_n the cap is n-1, which is just
  containment. For B(m, n) at N >= 2m+n+2 the cap is m+n: a vertex whose
  color degree reaches m+n+1 forces a monochromatic B(m, n), and since
  d_b + d_r = N-1 the same cap enforces the lower end of the degree window
  N-m-n-1 <= d_b, d_r;
* symmetry normalization is violated. Vertex 0 is taken to be a vertex of
  maximum color degree, its blue neighbors come first (vertices 1..d), and
  with color swap that degree is blue, so d >= (N-1)/2 and every color degree
  in the coloring is at most d.

Every cut is sound for the diagonal problem: it only removes colorings that
contain P or that are relabelings/color swaps of kept ones.
"""
from __future__ import annotations

import enum
import logging
import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from typing import Callable, Union

from .bounds import BoundInterval, pattern_bounds
from .embed import (bistar_at, contains_mono_pattern, find_embedding,
                    partial_contains_mono)
from .graph_core import Color, TwoColoring, edges_of, n_edges
from .patterns import PatternSpec, PlusEdge, as_bistar, as_star, format_pattern, pattern_graph

log = logging.getLogger(__name__)

BLUE, RED = 0, 1
_TICK = 0xFFF


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = 10**10
    wall_budget: float = 1800.0
    worker_count: int = 1
    prune_degree: bool = True
    prune_maxdeg_lemma: bool = True
    symmetry_color_swap: bool = True
    symmetry_first_vertex: bool = True
    # parallel runs split the tree after the edges among this many vertices
    split_vertices: int = 5

    def __post_init__(self):
        if self.node_budget <= 0 or self.wall_budget <= 0:
            raise ValueError("budgets must be positive")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")

    def unpruned(self) -> "SearchConfig":
        return replace(self, prune_degree=False, prune_maxdeg_lemma=False,
                       symmetry_color_swap=False, symmetry_first_vertex=False)


@dataclass(frozen=True)
class AllColoringsContain:
    nodes_explored: int


@dataclass(frozen=True)
class Counterexample:
    coloring: TwoColoring
    nodes_explored: int = 0


@dataclass(frozen=True)
class BudgetExhausted:
    nodes_explored: int
    reason: str = "node budget"


SearchOutcome = Union[AllColoringsContain, Counterexample, BudgetExhausted]


class Prune(enum.Enum):
    PRUNE = "prune"
    CONTINUE = "continue"


def degree_window_applies(p: PatternSpec, n_vertices: int) -> bool:
    """The max-degree lemma and degree window hold for plain bistars at N >= 2m+n+2."""
    if isinstance(p, PlusEdge):
        return False
    bi = as_bistar(p)
    return bi is not None and n_vertices >= 2 * bi[0] + bi[1] + 2


def prune_check(partial: TwoColoring, p: PatternSpec, cfg: SearchConfig | None = None) -> Prune:
    """Can every completion of ``partial`` be skipped when proving the arrow?"""
    cfg = cfg or SearchConfig()
    if partial_contains_mono(partial, p):
        return Prune.PRUNE
    if (cfg.prune_degree or cfg.prune_maxdeg_lemma) and degree_window_applies(p, partial.n_vertices):
        m, n = as_bistar(p)
        for adj in (partial.blue_adjacency, partial.red_adjacency):
            if any(x.bit_count() >= m + n + 1 for x in adj):
                return Prune.PRUNE
    return Prune.CONTINUE


# -- engine --------------------------------------------------------------------


class _Stop(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class _Engine:
    def __init__(self, p: PatternSpec, n_vertices: int, cfg: SearchConfig,
                 latch=None, counter=None, progress=None):
        self.p = p
        self.N = n_vertices
        self.cfg = cfg
        self.pg = pattern_graph(p)
        self.edges = list(edges_of(n_vertices))
        self.E = len(self.edges)
        self.adj = [[0] * n_vertices, [0] * n_vertices]
        self.deg = [[0] * n_vertices, [0] * n_vertices]
        self.colors: list[int] = []
        self.sym_cap: int | None = None
        self.nodes = 0
        self.budget = cfg.node_budget
        self.depth_hist = [0] * (self.E + 1)
        self.latch = latch
        self.counter = counter
        self.flushed = 0
        self.progress = progress
        self.start = time.monotonic()
        self.forced: tuple[int, ...] = ()
        self.collect_depth: int | None = None
        self.collected: list[tuple[int, ...]] = []

        cap = n_vertices - 1
        self.star = as_star(p) if not isinstance(p, PlusEdge) else None
        self.bistar = as_bistar(p) if not isinstance(p, PlusEdge) else None
        if self.star is not None:
            cap = min(cap, self.star - 1)
        elif self.bistar is not None and (cfg.prune_degree or cfg.prune_maxdeg_lemma) \
                and degree_window_applies(p, n_vertices):
            cap = min(cap, sum(self.bistar))
        self.static_cap = cap

    # -- bookkeeping

    def _tick(self):
        now = time.monotonic()
        if self.counter is not None:
            with self.counter.get_lock():
                self.counter.value += self.nodes - self.flushed
                total = self.counter.value
            self.flushed = self.nodes
        else:
            total = self.nodes
        if total > self.cfg.node_budget:
            raise _Stop("node budget")
        if now - self.start > self.cfg.wall_budget:
            raise _Stop("wall budget")
        if self.latch is not None and self.latch.is_set():
            raise _Stop("cancelled")
        if self.progress is not None:
            self.progress(self.nodes, now - self.start, self.depth_hist)

    def _choices(self, pos: int, i: int, t: int):
        if pos < len(self.forced):
            return (self.forced[pos],)
        if i == 0:
            cfg = self.cfg
            if cfg.symmetry_first_vertex:
                if t > 1 and not self.adj[BLUE][0] >> (t - 1) & 1:
                    return (RED,)
                if cfg.symmetry_color_swap and 2 * (t - 1) < self.N - 1:
                    return (BLUE,)
            elif cfg.symmetry_color_swap and t == 1:
                return (BLUE,)
        return (BLUE, RED)

    def _hit(self, adj: list[int], i: int, t: int) -> bool:
        if self.star is not None:
            return False  # covered by the degree cap
        if self.bistar is not None:
            m, n = self.bistar
            return bistar_at(adj, i, m, n) or bistar_at(adj, t, m, n)
        return find_embedding(self.pg, adj, anchor=(i, t)) is not None

    # -- depth-first search

    def _dfs(self, pos: int) -> bool:
        if pos == self.E:
            return True
        if pos == self.collect_depth:
            self.collected.append(tuple(self.colors))
            return False
        i, t = self.edges[pos]
        replay = pos < len(self.forced)
        for color in self._choices(pos, i, t):
            if not replay:
                self.nodes += 1
                self.depth_hist[pos] += 1
                if not self.nodes & _TICK or self.nodes > self.budget:
                    self._tick()
            adj = self.adj[color]
            deg = self.deg[color]
            adj[i] |= 1 << t
            adj[t] |= 1 << i
            deg[i] += 1
            deg[t] += 1
            saved_cap = self.sym_cap
            if (i == 0 and color == RED and saved_cap is None
                    and self.cfg.symmetry_first_vertex):
                # vertex 0 ends with blue degree t-1 and red degree N-t
                self.sym_cap = max(t - 1, self.N - t)
            cap = self.static_cap if self.sym_cap is None else min(self.static_cap, self.sym_cap)
            self.colors.append(color)
            if deg[i] <= cap and deg[t] <= cap and not self._hit(adj, i, t):
                if self._dfs(pos + 1):
                    return True
            self.colors.pop()
            self.sym_cap = saved_cap
            adj[i] &= ~(1 << t)
            adj[t] &= ~(1 << i)
            deg[i] -= 1
            deg[t] -= 1
        return False

    def coloring(self) -> TwoColoring:
        return TwoColoring.from_adjacency(self.adj[BLUE], self.adj[RED])

    def run(self, prefix: tuple[int, ...] = ()) -> SearchOutcome:
        self.forced = prefix
        try:
            found = self._dfs(0)
        except _Stop as stop:
            return BudgetExhausted(self.nodes, stop.reason)
        if found:
            return Counterexample(self.coloring(), self.nodes)
        return AllColoringsContain(self.nodes)

    def collect(self, depth: int) -> list[tuple[int, ...]]:
        self.collect_depth = depth
        self._dfs(0)
        self.collect_depth = None
        return self.collected


# -- parallel driver -----------------------------------------------------------

_worker_latch = None
_worker_counter = None


def _init_worker(latch, counter):
    global _worker_latch, _worker_counter
    _worker_latch, _worker_counter = latch, counter


def _run_subtree(p: PatternSpec, n_vertices: int, cfg: SearchConfig,
                 prefix: tuple[int, ...], started: float) -> SearchOutcome:
    engine = _Engine(p, n_vertices, cfg, latch=_worker_latch, counter=_worker_counter)
    engine.start = started
    out = engine.run(prefix)
    if isinstance(out, Counterexample):
        _worker_latch.set()
    return out


def _decide_parallel(p: PatternSpec, n_vertices: int, cfg: SearchConfig) -> SearchOutcome:
    depth = n_edges(min(cfg.split_vertices, n_vertices))
    splitter = _Engine(p, n_vertices, cfg)
    if depth >= splitter.E:
        return splitter.run()
    try:
        prefixes = splitter.collect(depth)
    except _Stop as stop:
        return BudgetExhausted(splitter.nodes, stop.reason)
    nodes = splitter.nodes
    if not prefixes:
        return AllColoringsContain(nodes)
    ctx = mp.get_context()
    latch = ctx.Event()
    counter = ctx.Value("q", nodes)
    started = time.time()
    results: list[SearchOutcome] = []
    with ProcessPoolExecutor(cfg.worker_count, mp_context=ctx,
                             initializer=_init_worker, initargs=(latch, counter)) as pool:
        futures = [pool.submit(_run_subtree, p, n_vertices, cfg, prefix, time.monotonic())
                   for prefix in prefixes]
        for fut in as_completed(futures):
            out = fut.result()
            results.append(out)
            if isinstance(out, Counterexample):
                latch.set()
                for other in futures:
                    other.cancel()
                break
    total = nodes + sum(r.nodes_explored for r in results)
    log.debug("parallel search: %d subtrees, %d nodes, %.2fs",
              len(prefixes), total, time.time() - started)
    for r in results:
        if isinstance(r, Counterexample):
            return Counterexample(r.coloring, total)
    exhausted = [r for r in results if isinstance(r, BudgetExhausted)]
    if exhausted:
        return BudgetExhausted(total, exhausted[0].reason)
    return AllColoringsContain(total)


def _verify_counterexample(c: TwoColoring, p: PatternSpec) -> None:
    if not c.is_complete():
        raise RuntimeError("search returned an incomplete coloring")
    for color in Color:
        if contains_mono_pattern(c, color, p):
            raise RuntimeError(
                f"search bug: counterexample on K_{c.n_vertices} contains "
                f"a {color.value} {format_pattern(p)}")


def decide_arrow(p: PatternSpec, n_vertices: int, cfg: SearchConfig | None = None,
                 progress: Callable | None = None) -> SearchOutcome:
    """Does every 2-coloring of K_N contain a monochromatic ``p``?

    Counterexamples are re-verified with the generic embedder before they are
    returned. Budget exhaustion proves nothing either way.
    """
    cfg = cfg or SearchConfig()
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    if cfg.worker_count > 1:
        out = _decide_parallel(p, n_vertices, cfg)
    else:
        out = _Engine(p, n_vertices, cfg, progress=progress).run()
    if isinstance(out, Counterexample):
        _verify_counterexample(out.coloring, p)
    return out


# -- exact values ----------------------------------------------------------------


@dataclass(frozen=True)
class RamseyValue:
    value: int
    lower_certificate: TwoColoring
    upper_nodes: int
    outcomes: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class BoundedOnly:
    interval: BoundInterval
    reason: str
    outcomes: dict = field(default_factory=dict, compare=False)


def compute_ramsey(p: PatternSpec, cfg: SearchConfig | None = None,
                   decide: Callable[[PatternSpec, int, SearchConfig], SearchOutcome] | None = None,
                   ) -> RamseyValue | BoundedOnly:
    """Exact r(p) by search outward from the closed-form lower bound.

    The value v is reported only with a counterexample on K_{v-1} and an
    exhaustive proof on K_v. ``decide`` lets callers put a cache in front of
    :func:`decide_arrow`.
    """
    cfg = cfg or SearchConfig()
    decide = decide or decide_arrow
    iv = pattern_bounds(p)
    outcomes: dict[int, SearchOutcome] = {}
    N = iv.lo
    while True:
        # K_1 always has a (trivial) counterexample, so N never drops below 1
        out = outcomes[N] = decide(p, N, cfg)
        if isinstance(out, BudgetExhausted):
            return BoundedOnly(_tighten(iv, outcomes), out.reason, outcomes)
        if isinstance(out, AllColoringsContain):
            if isinstance(outcomes.get(N - 1), Counterexample):
                break
            if N < iv.lo:
                log.warning("%s: K_%d arrows, contradicting the lower bound %d",
                            format_pattern(p), N, iv.lo)
            N -= 1
        else:
            if isinstance(outcomes.get(N + 1), AllColoringsContain):
                N += 1
                break
            if N >= iv.hi:
                log.warning("%s: K_%d has a counterexample, contradicting the upper bound %d",
                            format_pattern(p), N, iv.hi)
            N += 1
    return RamseyValue(N, outcomes[N - 1].coloring, outcomes[N].nodes_explored, outcomes)


def _tighten(iv: BoundInterval, outcomes: dict[int, SearchOutcome]) -> BoundInterval:
    lo, lo_src, hi, hi_src = iv.lo, iv.lo_source, iv.hi, iv.hi_source
    for N, out in outcomes.items():
        if isinstance(out, Counterexample) and N + 1 > lo:
            lo, lo_src = N + 1, "exhaustive"
        if isinstance(out, AllColoringsContain) and N < hi:
            hi, hi_src = N, "exhaustive"
    return BoundInterval(lo, hi, lo_src, hi_src)
