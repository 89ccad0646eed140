"""Mixing properties of two-dimensional hom-shifts of finite graphs."""

__version__ = "0.1.0"

from .classify import ClassificationReport, Limits, classify
from .cover import build_cover, is_cover_finite, lift_walk
from .errors import BudgetExceeded, DomainError, GraphParseError, HomShiftError
from .folding import (
    find_collapsing_map,
    find_fold,
    is_bipartite_dismantlable,
    is_dismantlable,
    is_four_cycle_hom_free,
    stiff_reduce,
)
from .graph import (
    Graph,
    analyze_basic,
    cartesian_product,
    connected_components,
    fixture,
    parse_graph,
    tensor_product,
)
from .sofic import block_gluing_at, minimal_gluing_distance
from .walkgraph import build_cyclic_walk_graph, build_walk_graph, diameter, growth_probe

__all__ = [
    "BudgetExceeded",
    "ClassificationReport",
    "DomainError",
    "Graph",
    "GraphParseError",
    "HomShiftError",
    "Limits",
    "analyze_basic",
    "block_gluing_at",
    "build_cover",
    "build_cyclic_walk_graph",
    "build_walk_graph",
    "cartesian_product",
    "classify",
    "connected_components",
    "diameter",
    "find_collapsing_map",
    "find_fold",
    "fixture",
    "growth_probe",
    "is_bipartite_dismantlable",
    "is_cover_finite",
    "is_dismantlable",
    "is_four_cycle_hom_free",
    "lift_walk",
    "minimal_gluing_distance",
    "parse_graph",
    "stiff_reduce",
    "tensor_product",
]
