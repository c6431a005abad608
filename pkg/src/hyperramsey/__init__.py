"""k-uniform hypergraph Ramsey toolkit.

Generators, exact invariants, goodness certification, extremal colorings,
an exact two-colour Ramsey search engine and a registry of closed-form
Ramsey values for loose/tight paths, cycles, stars and their multiple copies.
"""

from hyperramsey.errors import CapExceeded, HypergraphError, ParseError
from hyperramsey.hypergraph import (
    Embedding,
    Hypergraph,
    complete,
    complete_kpartite,
    contains,
    disjoint_union,
    kneser,
    lift_graph,
    loose_cycle,
    loose_path,
    star,
    tight_cycle,
    tight_path,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Embedding",
    "Hypergraph",
    "HypergraphError",
    "ParseError",
    "complete",
    "complete_kpartite",
    "contains",
    "disjoint_union",
    "kneser",
    "lift_graph",
    "loose_cycle",
    "loose_path",
    "star",
    "tight_cycle",
    "tight_path",
]
