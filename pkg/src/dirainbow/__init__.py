"""Rainbow, rainbow-vertex and total-rainbow connection of digraphs."""

from .coloring import Coloring, ParamKind, combine
from .digraph import (
    Digraph,
    DistanceTable,
    biorient,
    build,
    classify,
    distances,
    expand,
    is_spanning_subdigraph,
    is_strongly_connected,
    lex_product,
    neighbors,
)
from .solver import SolveBudget, SolveResult, exact, exact_undirected, lower_bound
from . import cactus, families, io, tournaments
from .verify import CheckReport, check_connected, exists_rainbow_geodesic, exists_rainbow_path, rainbow_elements

__all__ = [
    "CheckReport",
    "Coloring",
    "Digraph",
    "DistanceTable",
    "ParamKind",
    "SolveBudget",
    "SolveResult",
    "biorient",
    "cactus",
    "build",
    "check_connected",
    "classify",
    "combine",
    "distances",
    "exact",
    "exact_undirected",
    "exists_rainbow_geodesic",
    "exists_rainbow_path",
    "expand",
    "families",
    "io",
    "is_spanning_subdigraph",
    "is_strongly_connected",
    "lex_product",
    "lower_bound",
    "neighbors",
    "rainbow_elements",
    "tournaments",
]
