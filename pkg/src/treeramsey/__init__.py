"""Exact Ramsey numbers of small trees by exhaustive 2-coloring search."""
from .bounds import BoundInterval, bistar_bounds, caterpillar_bounds, pattern_bounds, star_exact
from .graph_core import Color, TwoColoring
from .patterns import (AugKind, Bistar, Caterpillar, PlusEdge, Star, format_pattern,
                       parse_pattern, path, pattern_graph)
from .search import SearchConfig, compute_ramsey, decide_arrow

__version__ = "0.1.0"
