"""The G2(4) graph from the Hermitian unital in PG(2,16), and the derived
graphs E (320), F (256) and H (336)."""

from .analysis import SrgFailure, SrgParams, count_cliques, format_profile, verify_srg
from .construction import ConstructionState, construct
from .graph import Graph, GraphError
from .isomorphism import IsoWitness, NotFound, find_isomorphism, refine

__all__ = [
    "ConstructionState",
    "Graph",
    "GraphError",
    "IsoWitness",
    "NotFound",
    "SrgFailure",
    "SrgParams",
    "construct",
    "count_cliques",
    "find_isomorphism",
    "format_profile",
    "refine",
    "verify_srg",
]
