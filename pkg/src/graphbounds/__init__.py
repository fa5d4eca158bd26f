"""Graph spectra, exact invariants and machine checks of spectral bounds on small graphs."""

from ._accel import BACKEND
from .bounds import BoundCheck, EqualityClass
from .graph import Graph, GraphError, VertexSet, complement, components, cut_size, disjoint_union, graph_from_edges
from .graph6 import Graph6Error, encode_graph6, parse_graph6
from .invariants import INFINITE, InvariantProfile, domination_number, girth, profile
from .spectra import Spectrum, adjacency_spectrum, laplacian_spectrum, spectral_radius, symmetric_eigenvalues

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BoundCheck", "EqualityClass", "Graph", "GraphError", "VertexSet",
    "complement", "components", "cut_size", "disjoint_union", "graph_from_edges",
    "Graph6Error", "encode_graph6", "parse_graph6", "INFINITE", "InvariantProfile",
    "domination_number", "girth", "profile", "Spectrum", "adjacency_spectrum",
    "laplacian_spectrum", "spectral_radius", "symmetric_eigenvalues",
]
