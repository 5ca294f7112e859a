"""Discrete Morse and Lusternik-Schnirelmann theory on finite simple graphs."""

from .catalog import generator
from .complex import SimplicialComplex, barycentric_refinement, euler, whitney_complex
from .errors import BudgetExceeded, CapExceeded, GraphInputError, NotLocallyInjective
from .graphs import Digraph, Graph
from .hodge import betti

__all__ = [
    "BudgetExceeded", "CapExceeded", "Digraph", "Graph", "GraphInputError",
    "NotLocallyInjective", "SimplicialComplex", "barycentric_refinement", "betti", "euler",
    "generator", "whitney_complex",
]
