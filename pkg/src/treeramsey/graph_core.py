"""Edge indexing and partial red/blue colorings of complete graphs.

Edges of K_N are linearized column-major: the pair (i, j) with i < j maps to
``j*(j-1)//2 + i``. Certificate files and search prefixes depend on this
ordering, so it must not change.

A :class:`TwoColoring` stores two disjoint Python-int bitsets over the linear
edge indices. Per-vertex neighborhoods are derived lazily as vertex bitmasks.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class Color(enum.Enum):
    BLUE = "blue"
    RED = "red"

    @property
    def other(self) -> "Color":
        return Color.RED if self is Color.BLUE else Color.BLUE


def n_edges(n_vertices: int) -> int:
    return n_vertices * (n_vertices - 1) // 2


def to_linear(i: int, j: int) -> int:
    if i == j:
        raise ValueError(f"no loop edges: ({i}, {j})")
    if i > j:
        i, j = j, i
    if i < 0:
        raise ValueError(f"negative vertex in ({i}, {j})")
    return j * (j - 1) // 2 + i


def from_linear(index: int) -> tuple[int, int]:
    if index < 0:
        raise ValueError(f"negative edge index {index}")
    j = (1 + math.isqrt(1 + 8 * index)) // 2
    # isqrt can land one too high at exact triangular boundaries
    while j * (j - 1) // 2 > index:
        j -= 1
    return index - j * (j - 1) // 2, j


def edges_of(n_vertices: int) -> Iterator[tuple[int, int]]:
    """All pairs of K_N in linear-index (vertex-extension) order."""
    for j in range(1, n_vertices):
        for i in range(j):
            yield i, j


def _mask_to_adjacency(n_vertices: int, mask: int) -> tuple[int, ...]:
    adj = [0] * n_vertices
    while mask:
        low = mask & -mask
        i, j = from_linear(low.bit_length() - 1)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        mask ^= low
    return tuple(adj)


@dataclass(frozen=True)
class TwoColoring:
    """A (possibly partial) 2-coloring of the edges of K_N.

    ``blue`` and ``red`` are bitsets over linear edge indices; an edge in
    neither is uncolored.
    """

    n_vertices: int
    blue: int = 0
    red: int = 0

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("n_vertices must be non-negative")
        if self.blue & self.red:
            raise ValueError("an edge cannot be both blue and red")
        if (self.blue | self.red) >> n_edges(self.n_vertices):
            raise ValueError("edge index out of range for K_%d" % self.n_vertices)

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls, n_vertices: int) -> "TwoColoring":
        return cls(n_vertices)

    @classmethod
    def monochromatic(cls, n_vertices: int, color: Color = Color.BLUE) -> "TwoColoring":
        full = (1 << n_edges(n_vertices)) - 1
        if color is Color.BLUE:
            return cls(n_vertices, blue=full)
        return cls(n_vertices, red=full)

    @classmethod
    def from_blue_edges(cls, n_vertices: int, blue_edges: Iterable[tuple[int, int]]) -> "TwoColoring":
        """Complete coloring: listed edges blue, every other edge red."""
        blue = 0
        for i, j in blue_edges:
            if not (0 <= i < n_vertices and 0 <= j < n_vertices):
                raise ValueError(f"edge ({i}, {j}) outside K_{n_vertices}")
            blue |= 1 << to_linear(i, j)
        full = (1 << n_edges(n_vertices)) - 1
        return cls(n_vertices, blue=blue, red=full & ~blue)

    @classmethod
    def from_adjacency(cls, blue_adj: Iterable[int], red_adj: Iterable[int]) -> "TwoColoring":
        blue_adj, red_adj = list(blue_adj), list(red_adj)
        blue = red = 0
        for j in range(len(blue_adj)):
            for i in range(j):
                if blue_adj[j] >> i & 1:
                    blue |= 1 << to_linear(i, j)
                elif red_adj[j] >> i & 1:
                    red |= 1 << to_linear(i, j)
        return cls(len(blue_adj), blue=blue, red=red)

    @classmethod
    def random(cls, n_vertices: int, rng: random.Random | None = None, p_blue: float = 0.5) -> "TwoColoring":
        rng = rng or random.Random()
        blue = 0
        for e in range(n_edges(n_vertices)):
            if rng.random() < p_blue:
                blue |= 1 << e
        full = (1 << n_edges(n_vertices)) - 1
        return cls(n_vertices, blue=blue, red=full & ~blue)

    # -- queries ----------------------------------------------------------

    @property
    def n_edges(self) -> int:
        return n_edges(self.n_vertices)

    def is_complete(self) -> bool:
        return (self.blue | self.red) == (1 << self.n_edges) - 1

    def color_of(self, i: int, j: int) -> Color | None:
        bit = 1 << to_linear(i, j)
        if self.blue & bit:
            return Color.BLUE
        if self.red & bit:
            return Color.RED
        return None

    def mask(self, color: Color) -> int:
        return self.blue if color is Color.BLUE else self.red

    @cached_property
    def blue_adjacency(self) -> tuple[int, ...]:
        return _mask_to_adjacency(self.n_vertices, self.blue)

    @cached_property
    def red_adjacency(self) -> tuple[int, ...]:
        return _mask_to_adjacency(self.n_vertices, self.red)

    def adjacency(self, color: Color) -> tuple[int, ...]:
        """Vertex bitmask of ``color``-neighbors, one entry per vertex."""
        return self.blue_adjacency if color is Color.BLUE else self.red_adjacency

    def neighbors(self, v: int, color: Color) -> set[int]:
        mask = self.adjacency(color)[v]
        return {u for u in range(self.n_vertices) if mask >> u & 1}

    def color_degree(self, v: int, color: Color) -> int:
        return color_degree(self, v, color)

    def edges(self, color: Color) -> list[tuple[int, int]]:
        mask = self.mask(color)
        out = []
        while mask:
            low = mask & -mask
            out.append(from_linear(low.bit_length() - 1))
            mask ^= low
        return out

    # -- derived colorings ------------------------------------------------

    def with_edge(self, i: int, j: int, color: Color | None) -> "TwoColoring":
        bit = 1 << to_linear(i, j)
        blue, red = self.blue & ~bit, self.red & ~bit
        if color is Color.BLUE:
            blue |= bit
        elif color is Color.RED:
            red |= bit
        return TwoColoring(self.n_vertices, blue=blue, red=red)

    def complement(self) -> "TwoColoring":
        return complement(self)

    def restrict(self, n_vertices: int) -> "TwoColoring":
        """The coloring induced on the first ``n_vertices`` vertices."""
        keep = (1 << n_edges(n_vertices)) - 1
        return TwoColoring(n_vertices, blue=self.blue & keep, red=self.red & keep)

    def permuted(self, perm: list[int]) -> "TwoColoring":
        """Relabel vertex v as perm[v]."""
        blue = red = 0
        for color in (Color.BLUE, Color.RED):
            for i, j in self.edges(color):
                bit = 1 << to_linear(perm[i], perm[j])
                if color is Color.BLUE:
                    blue |= bit
                else:
                    red |= bit
        return TwoColoring(self.n_vertices, blue=blue, red=red)


def color_degree(c: TwoColoring, v: int, color: Color) -> int:
    """Number of ``color`` edges at ``v``; uncolored edges are not counted."""
    if not 0 <= v < c.n_vertices:
        raise ValueError(f"vertex {v} outside K_{c.n_vertices}")
    return c.adjacency(color)[v].bit_count()


def complement(c: TwoColoring) -> TwoColoring:
    return TwoColoring(c.n_vertices, blue=c.red, red=c.blue)
