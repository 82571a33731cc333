"""Entangled graphs: construction, classification, comparison and export."""

from magnons.entangled_graphs.graph import (
    Edge,
    EdgeClass,
    EntangledGraph,
    GraphEntry,
    GraphMode,
    build_graph,
    classify_weights,
    enumerate_graphs,
    graph_equal,
    parse_mode,
)

__all__ = [
    "Edge",
    "EdgeClass",
    "EntangledGraph",
    "GraphEntry",
    "GraphMode",
    "build_graph",
    "classify_weights",
    "enumerate_graphs",
    "graph_equal",
    "parse_mode",
]
