"""Exact edge cut domination parameters for small graphs, with a claim verification harness."""

from .classical import (
    CapExceededError,
    ParamResult,
    edge_connectivity,
    edge_cover_number,
    edge_domination_number,
    max_matching,
)
from .cutdom import CtProfile, ct_profile, enumerate_minimal_ecd, gamma_ct
from .graph import EdgeSet, Graph, GraphError, canonical_form, component_count, is_connected, new_graph
from .graph_io import ParseError, parse_edgelist, parse_graph6, write_edgelist, write_graph6
from .predicates import InterpretationMode, PreconditionError

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CtProfile",
    "EdgeSet",
    "Graph",
    "GraphError",
    "InterpretationMode",
    "ParamResult",
    "ParseError",
    "PreconditionError",
    "canonical_form",
    "component_count",
    "ct_profile",
    "edge_connectivity",
    "edge_cover_number",
    "edge_domination_number",
    "enumerate_minimal_ecd",
    "gamma_ct",
    "is_connected",
    "max_matching",
    "new_graph",
    "parse_edgelist",
    "parse_graph6",
    "write_edgelist",
    "write_graph6",
]
