"""Discharging toolkit for sparse graphs.

Exact densities, configuration detectors, discharging rule replay,
constructive colorers and brute-force oracles, all over exact rationals.
"""
from .graph import Graph, GraphError, ParseError, parse_graph, serialize_graph
from .plane import PlaneGraph, parse_embedding, serialize_embedding
from .density import degeneracy, fractional_arboricity, mad, potential_min
from .errors import HypothesisError, Infeasible, InvariantViolation

__version__ = "0.1.0"
