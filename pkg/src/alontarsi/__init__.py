"""Exact Alon-Tarsi choosability: graph polynomials, permanents, eulerian sums and signed colouring sums."""

from .budget import DEFAULT_BUDGET, BudgetExceeded
from .certifiers import (
    EulerCount,
    PreconditionError,
    build_permanent_matrix,
    coefficient_via_permanent,
    euler_diff,
    graph_polynomial,
    nz_signed_sum,
    signed_coloring_sum,
    signed_sum_regular,
    weighted_subgraph_sum,
)
from .graphs import (
    GraphError,
    Hypergraph,
    MultiGraph,
    Orientation,
    canonical_orientation,
    coloring_number_col,
    enumerate_orientations,
    generate_family,
    line_graph,
    max_density,
    parse_hypergraph,
    parse_multigraph,
    structural_at_le_2,
)
from .solver import (
    ATCertificate,
    at_number,
    at_via_orientation_search,
    bounds_report,
    is_f_AT,
)

__version__ = "0.1.0"

__all__ = [
    "ATCertificate",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "EulerCount",
    "GraphError",
    "Hypergraph",
    "MultiGraph",
    "Orientation",
    "PreconditionError",
    "at_number",
    "at_via_orientation_search",
    "bounds_report",
    "build_permanent_matrix",
    "canonical_orientation",
    "coefficient_via_permanent",
    "coloring_number_col",
    "enumerate_orientations",
    "euler_diff",
    "generate_family",
    "graph_polynomial",
    "is_f_AT",
    "line_graph",
    "max_density",
    "nz_signed_sum",
    "parse_hypergraph",
    "parse_multigraph",
    "signed_coloring_sum",
    "signed_sum_regular",
    "structural_at_le_2",
    "weighted_subgraph_sum",
]
