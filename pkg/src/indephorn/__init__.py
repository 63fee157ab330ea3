"""Exact arithmetic for independence polynomials, chordal graphs and
Horn hypergeometric power series expansions."""

from .graph import Graph, make_cycle, make_path, make_complete, make_empty
from .poly import MultiPoly, independence_polynomial, fibonacci_poly

__all__ = [
    "Graph",
    "make_cycle",
    "make_path",
    "make_complete",
    "make_empty",
    "MultiPoly",
    "independence_polynomial",
    "fibonacci_poly",
]
