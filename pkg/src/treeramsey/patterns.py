"""Target patterns: stars, bistars, caterpillars, and single-edge augmentations.

Pattern text grammar (CLI and certificates)::

    star <n>
    bistar <m> <n>
    caterpillar <n1> <n2> ...
    path <k>
    <base> +e <class> [m|n]

where ``class`` is one of ``ll-same``, ``ll-diff``, ``leaf-far-center`` (bistar
bases) or ``ll`` (star bases). The trailing ``m``/``n`` picks which center's
leaves the ``ll-same`` and ``leaf-far-center`` edges use; it defaults to ``m``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union


class PatternError(ValueError):
    """Invalid pattern parameters or unparseable pattern text."""


GRAMMAR = (
    "star <n> | bistar <m> <n> | caterpillar <n1> ... <nk> | path <k> | "
    "<base> +e {ll-same|ll-diff|leaf-far-center|ll} [m|n]"
)


class AugKind(enum.Enum):
    LL_SAME = "ll-same"
    LL_DIFF = "ll-diff"
    LEAF_FAR_CENTER = "leaf-far-center"
    LL = "ll"


@dataclass(frozen=True)
class Star:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise PatternError(f"star needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class Bistar:
    m: int
    n: int

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise PatternError(f"bistar needs 1 <= m <= n, got ({self.m}, {self.n})")


@dataclass(frozen=True)
class Caterpillar:
    leaves: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "leaves", tuple(int(x) for x in self.leaves))
        if not self.leaves:
            raise PatternError("caterpillar needs at least one spine vertex")
        if any(x < 0 for x in self.leaves):
            raise PatternError("leaf counts must be non-negative")
        if self.is_path():
            if self.k < 2:
                raise PatternError("a path needs at least 2 vertices")
            return
        if self.leaves[0] == 0 or self.leaves[-1] == 0:
            raise PatternError(
                "caterpillar end spine vertices need leaves (use 'path k' for paths)")

    def is_path(self) -> bool:
        return not any(self.leaves)

    @property
    def k(self) -> int:
        return len(self.leaves)


@dataclass(frozen=True)
class PlusEdge:
    base: Union[Star, Bistar]
    kind: AugKind
    side: str = "m"

    def __post_init__(self):
        if self.side not in ("m", "n"):
            raise PatternError(f"side must be 'm' or 'n', got {self.side!r}")
        if isinstance(self.base, Star):
            if self.kind is not AugKind.LL:
                raise PatternError(f"{self.kind.value} is not defined on a star base")
            if self.base.n < 2:
                raise PatternError("star + leaf-leaf edge needs at least 2 leaves")
        elif isinstance(self.base, Bistar):
            if self.kind is AugKind.LL:
                raise PatternError("'ll' applies to star bases; use ll-same or ll-diff")
            if self.kind is AugKind.LL_SAME:
                count = self.base.m if self.side == "m" else self.base.n
                if count < 2:
                    raise PatternError(
                        f"ll-same at the {self.side}-center needs 2 leaves there, has {count}")
        else:
            raise PatternError("augmented patterns need a star or bistar base")


PatternSpec = Union[Star, Bistar, Caterpillar, PlusEdge]


def path(k: int) -> Caterpillar:
    if k < 2:
        raise PatternError(f"path needs k >= 2, got {k}")
    return Caterpillar((0,) * k)


def as_caterpillar(p: PatternSpec) -> Caterpillar:
    if isinstance(p, Caterpillar):
        return p
    if isinstance(p, Star):
        return Caterpillar((p.n,))
    if isinstance(p, Bistar):
        return Caterpillar((p.m, p.n))
    raise PatternError(f"{format_pattern(p)} is not a caterpillar")


def as_star(p: PatternSpec) -> int | None:
    """Leaf count if ``p`` is a star graph (including P_2, P_3), else None."""
    if isinstance(p, Star):
        return p.n
    if isinstance(p, Caterpillar):
        if p.k == 1 and p.leaves[0] >= 1:
            return p.leaves[0]
        if p.is_path() and p.k in (2, 3):
            return p.k - 1
    return None


def as_bistar(p: PatternSpec) -> tuple[int, int] | None:
    """(m, n) with m <= n if ``p`` is a bistar graph (including P_4), else None."""
    if isinstance(p, Bistar):
        return p.m, p.n
    if isinstance(p, Caterpillar):
        if p.k == 2 and min(p.leaves) >= 1:
            return min(p.leaves), max(p.leaves)
        if p.is_path() and p.k == 4:
            return 1, 1
    return None


def is_tree(p: PatternSpec) -> bool:
    return not isinstance(p, PlusEdge)


# -- explicit graphs -------------------------------------------------------


@dataclass(frozen=True)
class PatternGraph:
    """Explicit pattern graph. ``spine`` lists spine vertices in path order."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    spine: tuple[int, ...]

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[int]:
        adj = [0] * self.n_vertices
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    def degrees(self) -> list[int]:
        return [x.bit_count() for x in self.adjacency()]


def _caterpillar_graph(leaves: tuple[int, ...]) -> PatternGraph:
    k = len(leaves)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, count in enumerate(leaves):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return PatternGraph(nxt, tuple(edges), tuple(range(k)))


def pattern_graph(p: PatternSpec) -> PatternGraph:
    """Explicit graph of ``p``.

    Layouts: a star has center 0 and leaves 1..n. A bistar has the m-center at
    0, the n-center at 1, the m-center's leaves at 2..m+1 and the n-center's
    leaves after them. Caterpillars number the spine 0..k-1, then leaves
    grouped by spine vertex.
    """
    if isinstance(p, (Star, Bistar, Caterpillar)):
        return _caterpillar_graph(as_caterpillar(p).leaves)
    base = pattern_graph(p.base)
    if isinstance(p.base, Star):
        extra = (1, 2)
    else:
        m, n = p.base.m, p.base.n
        first_m, first_n = 2, m + 2
        if p.kind is AugKind.LL_SAME:
            start = first_m if p.side == "m" else first_n
            extra = (start, start + 1)
        elif p.kind is AugKind.LL_DIFF:
            extra = (first_m, first_n)
        else:
            extra = (first_m, 1) if p.side == "m" else (first_n, 0)
    return PatternGraph(base.n_vertices, base.edges + (extra,), base.spine)


def vertex_count(p: PatternSpec) -> int:
    if isinstance(p, PlusEdge):
        return vertex_count(p.base)
    return sum(as_caterpillar(p).leaves) + as_caterpillar(p).k


def edge_count(p: PatternSpec) -> int:
    if isinstance(p, PlusEdge):
        return vertex_count(p.base)
    return vertex_count(p) - 1


# -- text grammar ----------------------------------------------------------


def format_pattern(p: PatternSpec) -> str:
    if isinstance(p, Star):
        return f"star {p.n}"
    if isinstance(p, Bistar):
        return f"bistar {p.m} {p.n}"
    if isinstance(p, Caterpillar):
        if p.is_path():
            return f"path {p.k}"
        return "caterpillar " + " ".join(map(str, p.leaves))
    text = f"{format_pattern(p.base)} +e {p.kind.value}"
    if p.kind in (AugKind.LL_SAME, AugKind.LEAF_FAR_CENTER):
        text += f" {p.side}"
    return text


def _ints(tokens: list[str], what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise PatternError(f"{what}: expected integers, got {' '.join(tokens)!r}") from None


def parse_pattern(text: str | list[str]) -> PatternSpec:
    """Parse pattern text. Bistar centers given as ``bistar 3 2`` are swapped."""
    tokens = text.split() if isinstance(text, str) else list(text)
    try:
        return _parse(tokens)
    except PatternError as exc:
        raise PatternError(f"{exc} (grammar: {GRAMMAR})") from None


def _parse(tokens: list[str]) -> PatternSpec:
    if not tokens:
        raise PatternError("empty pattern")
    if "+e" in tokens:
        at = tokens.index("+e")
        base = _parse(tokens[:at])
        rest = tokens[at + 1:]
        if not 1 <= len(rest) <= 2:
            raise PatternError("'+e' takes a class and an optional side")
        try:
            kind = AugKind(rest[0])
        except ValueError:
            raise PatternError(f"unknown augmentation class {rest[0]!r}") from None
        if isinstance(base, Caterpillar):
            star_n, bi = as_star(base), as_bistar(base)
            if base.k == 1 and star_n:
                base = Star(star_n)
            elif base.k == 2 and bi:
                base = Bistar(*bi)
        if not isinstance(base, (Star, Bistar)):
            raise PatternError("'+e' needs a star or bistar base")
        side = rest[1] if len(rest) == 2 else "m"
        return PlusEdge(base, kind, side)
    head, args = tokens[0], tokens[1:]
    if head == "star":
        vals = _ints(args, "star")
        if len(vals) != 1:
            raise PatternError("star takes one leaf count")
        return Star(vals[0])
    if head == "bistar":
        vals = _ints(args, "bistar")
        if len(vals) != 2:
            raise PatternError("bistar takes two leaf counts")
        return Bistar(min(vals), max(vals))
    if head == "caterpillar":
        vals = _ints(args, "caterpillar")
        return Caterpillar(tuple(vals))
    if head == "path":
        vals = _ints(args, "path")
        if len(vals) != 1:
            raise PatternError("path takes one vertex count")
        return path(vals[0])
    raise PatternError(f"unknown pattern kind {head!r}")
