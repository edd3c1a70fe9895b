"""Hypergraph total-distance toolkit.

Computes distance invariants (total distance / Wiener index,
transmission, diameter) on hypergraphs, verifies whether the total
distance survives every single-vertex deletion, constructs the known
families with that property, and reproduces the small-order uniqueness
results by exhaustive search.
"""

from .hypergraph import (
    DegreeSummary,
    Hypergraph,
    clique,
    degrees,
    delete_vertex,
    dual,
    hypergraph,
    incidence_sets,
    is_connected,
    is_isomorphic,
    two_section,
    uniformity,
    validate,
)
from .metrics import (
    DeltaReport,
    DeltaRow,
    DistanceRow,
    delta_report,
    diameter,
    distances_from,
    is_soltes,
    transmission,
    wiener,
)

__all__ = [
    "DegreeSummary",
    "DeltaReport",
    "DeltaRow",
    "DistanceRow",
    "Hypergraph",
    "clique",
    "degrees",
    "delete_vertex",
    "delta_report",
    "diameter",
    "distances_from",
    "dual",
    "hypergraph",
    "incidence_sets",
    "is_connected",
    "is_isomorphic",
    "is_soltes",
    "transmission",
    "two_section",
    "uniformity",
    "validate",
    "wiener",
]

__version__ = "0.1.0"
