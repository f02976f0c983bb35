"""Enumeration of minimal node/edge multicuts and multiway cuts."""

from .graph import Graph, parse_graph
from .multicut import enumerate_minimal_edge_multicuts, enumerate_minimal_node_multicuts
from .multiway_edge import enumerate_minimal_edge_multiway
from .multiway_node import enumerate_minimal_node_multiway
from .separators import SeparatorInstance, enumerate_minimal_ab_separators

__all__ = [
    "Graph",
    "parse_graph",
    "enumerate_minimal_node_multicuts",
    "enumerate_minimal_edge_multicuts",
    "enumerate_minimal_node_multiway",
    "enumerate_minimal_edge_multiway",
    "SeparatorInstance",
    "enumerate_minimal_ab_separators",
]
