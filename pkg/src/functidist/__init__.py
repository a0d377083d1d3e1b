"""Distinguishing numbers of graphs and functigraphs."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .automorphism import (
    AutGroup,
    Coloring,
    Permutation,
    all_automorphisms,
    automorphism_group,
    brute_force_group,
    is_distinguishing,
    orbits,
)
from .constructions import construct, edge_deleted_complete, phi, psi, stem_labeling
from .distinguishing import (
    DistResult,
    SearchBudget,
    dist_exact,
    dist_lower_bound,
    dist_oracle,
    swap_certificate,
    verify_witness,
)
from .functigraph import (
    FiberStats,
    Functigraph,
    VertexFunction,
    build_functigraph,
    enumerate_functions,
    fiber_stats,
)
from .graph import Graph, GraphError, join, make_graph, twin_partition, twin_stems

__all__ = [
    "BACKEND",
    "AutGroup",
    "Coloring",
    "DistResult",
    "FiberStats",
    "Functigraph",
    "Graph",
    "GraphError",
    "Permutation",
    "SearchBudget",
    "VertexFunction",
    "all_automorphisms",
    "automorphism_group",
    "brute_force_group",
    "build_functigraph",
    "construct",
    "dist_exact",
    "dist_lower_bound",
    "dist_oracle",
    "edge_deleted_complete",
    "enumerate_functions",
    "fiber_stats",
    "is_distinguishing",
    "join",
    "make_graph",
    "orbits",
    "phi",
    "psi",
    "stem_labeling",
    "swap_certificate",
    "twin_partition",
    "twin_stems",
]
