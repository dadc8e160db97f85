"""Steiner sets on convex bipartite graphs."""

from ._cbsteiner import (
    ConvexBipartiteGraph,
    InternalInconsistency,
    OracleScaleExceeded,
    ParseError,
    audit,
    canonical_form,
    dominating_set,
    generate,
    interval_steiner,
    min_dominating_set,
    oracle,
    parse_cbg,
    reference_traces,
    solve,
    solve_table,
    vertex_cover_reduction,
)

__all__ = [
    "ConvexBipartiteGraph",
    "InternalInconsistency",
    "OracleScaleExceeded",
    "ParseError",
    "audit",
    "canonical_form",
    "dominating_set",
    "generate",
    "interval_steiner",
    "min_dominating_set",
    "oracle",
    "parse_cbg",
    "reference_traces",
    "solve",
    "solve_table",
    "vertex_cover_reduction",
]
