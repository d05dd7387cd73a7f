"""Rainbow vertex-disconnection colorings of graphs."""

from .graph import Graph
from .rainbow import CutCertificate, VertexColoring, find_rainbow_cut, verify_coloring
from .solver import RvdResult, rvd, rvd_exact, sparse_coloring

__all__ = [
    "Graph",
    "VertexColoring",
    "CutCertificate",
    "RvdResult",
    "find_rainbow_cut",
    "verify_coloring",
    "rvd",
    "rvd_exact",
    "sparse_coloring",
]
