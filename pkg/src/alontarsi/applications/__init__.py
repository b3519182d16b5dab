"""Uniquely colourable graphs, hypergraph AT certificates and T-list colouring of even cycles."""

from .hypergraphs import (
    HyperATReport,
    QSpec,
    fano_q,
    format_qspec,
    hypergraph_f_AT,
    hypergraph_polynomial,
    hypergraph_product,
    parse_qspec,
)
from .tlist import TListReport, shifted_cycle_product, t_cycle_product, t_list_cycle_check
from .unique import (
    CertificateReport,
    UniqueColoring,
    UniquePartition,
    min_edge_unique_certificate,
    parity_counts,
    parity_unique_certificate,
    unique_coloring,
)

__all__ = [
    "CertificateReport",
    "HyperATReport",
    "QSpec",
    "TListReport",
    "UniqueColoring",
    "UniquePartition",
    "fano_q",
    "format_qspec",
    "hypergraph_f_AT",
    "hypergraph_polynomial",
    "hypergraph_product",
    "min_edge_unique_certificate",
    "parity_counts",
    "parity_unique_certificate",
    "parse_qspec",
    "shifted_cycle_product",
    "t_cycle_product",
    "t_list_cycle_check",
    "unique_coloring",
]
