"""Exact edge betweenness centrality and edge-betweenness-uniformity analysis.

All centrality values are exact rationals and cross the C++/Python boundary
as "p/q" strings; use `as_fraction` to get `fractions.Fraction` objects.
"""

import json
from fractions import Fraction

from ._core import (
    Graph,
    are_isomorphic,
    canonical_graph6,
    circulant,
    circulant_distance_regular,
    circulant_isomorphic,
    closed_form_diameter2,
    conjecture_circulant,
    diameter,
    edge_betweenness,
    family,
    is_connected,
    is_distance_regular,
    is_edge_betweenness_uniform,
    is_edge_transitive,
    is_vertex_transitive,
    tetravalent_circulant_edge_transitive,
)
from ._core import ebu_certificate as _ebu_certificate_json


def as_fraction(value):
    """Turn a "p/q" string from this library into a fractions.Fraction."""
    return Fraction(value)


def ebu_certificate(cls, n):
    """Structural EBU certificate for C_{18n-3}(1,6n) (cls=1) or
    C_{18n+3}(1,6n) (cls=2), as a dict."""
    return json.loads(_ebu_certificate_json(cls, n))


__all__ = [
    "Graph",
    "are_isomorphic",
    "as_fraction",
    "canonical_graph6",
    "circulant",
    "circulant_distance_regular",
    "circulant_isomorphic",
    "closed_form_diameter2",
    "conjecture_circulant",
    "diameter",
    "ebu_certificate",
    "edge_betweenness",
    "family",
    "is_connected",
    "is_distance_regular",
    "is_edge_betweenness_uniform",
    "is_edge_transitive",
    "is_vertex_transitive",
    "tetravalent_circulant_edge_transitive",
]
