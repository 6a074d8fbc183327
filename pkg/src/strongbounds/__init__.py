"""Boundary-type vertex sets of strong digraphs under the maximum-distance metric.

Core objects: `Digraph` (loop-free, simple, immutable), `MetricProfile`
(max-distance table, eccentricities, radius, diameter), `BoundaryProfile`
(boundary, contour, eccentricity set, periphery), and the strong product with
factor-side formulas for all four sets plus a brute-force verification
harness that compares the formulas against definition-level computation on the
constructed product.
"""

from ._kernels import ACTIVE_LANE, NUMBA_ENABLED
from .boundary import (
    BoundaryProfile,
    boundary_profile,
    boundary_set,
    contour_set,
    eccentric_set,
    is_boundary_vertex_of,
    periphery_set,
)
from .digraph import Digraph, from_arcs, is_strong
from .errors import (
    InvalidConfig,
    LoopArc,
    NotStrong,
    ParallelArc,
    ParseError,
    SizeOverflow,
    StrongboundsError,
    UnknownSetName,
    VertexOutOfRange,
)
from .generator import GeneratedDigraph, GeneratorConfig, generate_strong_digraph
from .io_formats import (
    EdgeListDocument,
    export_dot,
    parse_edge_list,
    resolve_set_name,
    serialize_edge_list,
)
from .metric import (
    UNREACHABLE,
    DistanceMatrix,
    MetricProfile,
    all_pairs_directed,
    directed_distances_from,
    max_distance,
    metric_profile,
    sum_distance,
)
from .product import (
    DEFAULT_VERTEX_BUDGET,
    FactorPair,
    ProductLabel,
    UndirectedFormulaReport,
    product_arc_count,
    product_boundary_profile_via_factors,
    product_boundary_via_factors,
    product_contour_via_factors,
    product_distance,
    product_eccentric_via_factors,
    product_eccentricities,
    product_metric_profile,
    product_metric_summary,
    product_periphery_via_factors,
    strong_product,
    swap_product_set,
    undirected_formula_counterexample,
)
from .report import AnalysisReport, analyze_digraph, analyze_product
from .verify import PROPERTIES, VerificationSummary, run_verification

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_LANE",
    "NUMBA_ENABLED",
    "AnalysisReport",
    "BoundaryProfile",
    "DEFAULT_VERTEX_BUDGET",
    "Digraph",
    "DistanceMatrix",
    "EdgeListDocument",
    "FactorPair",
    "GeneratedDigraph",
    "GeneratorConfig",
    "InvalidConfig",
    "LoopArc",
    "MetricProfile",
    "NotStrong",
    "PROPERTIES",
    "ParallelArc",
    "ParseError",
    "ProductLabel",
    "SizeOverflow",
    "StrongboundsError",
    "UNREACHABLE",
    "UndirectedFormulaReport",
    "UnknownSetName",
    "VerificationSummary",
    "VertexOutOfRange",
    "all_pairs_directed",
    "analyze_digraph",
    "analyze_product",
    "boundary_profile",
    "boundary_set",
    "contour_set",
    "directed_distances_from",
    "eccentric_set",
    "export_dot",
    "from_arcs",
    "generate_strong_digraph",
    "is_boundary_vertex_of",
    "is_strong",
    "max_distance",
    "metric_profile",
    "parse_edge_list",
    "periphery_set",
    "product_arc_count",
    "product_boundary_profile_via_factors",
    "product_boundary_via_factors",
    "product_contour_via_factors",
    "product_distance",
    "product_eccentric_via_factors",
    "product_eccentricities",
    "product_metric_profile",
    "product_metric_summary",
    "product_periphery_via_factors",
    "resolve_set_name",
    "run_verification",
    "serialize_edge_list",
    "strong_product",
    "sum_distance",
    "swap_product_set",
    "undirected_formula_counterexample",
]
