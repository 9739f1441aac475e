"""Planar graphs as the intersection of a chordal graph and a graph of clique cover width at most 7."""
from .errors import (
    EmbeddingError,
    GraphError,
    InvariantBreach,
    NotConnectedError,
    OracleLimitError,
    SchemaError,
)
from .graph import EmbeddedGraph, Graph, euler_certify, expand_vertices, contract_paths
from .io import parse_graph, serialize_graph
from .generate import GenSpec, fixture, random_planar
from .represent import RepresentationPair, planar_representation, universal_representation
from .verify import brute_bandwidth, brute_ccw, certify, is_chordal

__version__ = "0.1.0"

__all__ = [
    "Graph", "EmbeddedGraph", "euler_certify", "expand_vertices", "contract_paths",
    "parse_graph", "serialize_graph", "GenSpec", "fixture", "random_planar",
    "RepresentationPair", "planar_representation", "universal_representation",
    "brute_bandwidth", "brute_ccw", "certify", "is_chordal",
    "GraphError", "EmbeddingError", "NotConnectedError", "SchemaError", "OracleLimitError", "InvariantBreach",
]
