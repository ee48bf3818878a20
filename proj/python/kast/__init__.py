"""Python access to the kast singular-polynomial library."""

import json

from ._kast import (
    Graph,
    InputError,
    LimitError,
    RepresentabilityError,
    aztec_diamond,
    count_matchings,
    from_ascii,
    matchings,
    parse_graph,
    rectangle_grid,
    sigma_squared,
    table_check,
)
from . import _kast

__all__ = [
    "Graph",
    "InputError",
    "LimitError",
    "RepresentabilityError",
    "aztec_diamond",
    "closed_form_poly",
    "count_matchings",
    "from_ascii",
    "matchings",
    "parse_graph",
    "rectangle_grid",
    "sigma_squared",
    "singular_polynomial",
    "table_check",
    "verify",
]


def _coeffs(text):
    # big integers arrive as decimal strings
    out = []
    for c in json.loads(text)["coeffs"]:
        out.append(int(c) if isinstance(c, str) else c)
    return out


def singular_polynomial(graph, cls="kasteleyn", backend="exact"):
    """Coefficients of charpoly(A A*), highest degree first.

    Integer coefficients come back as ints (floats for the float backend).
    Anything else, such as a Laurent coefficient in q, is a list of
    {"exp", "re", "im"} terms.
    """
    return _coeffs(_kast._poly_json(graph, cls, backend))


def closed_form_poly(rows, cols):
    return _coeffs(_kast._closed_form_json(rows, cols))


def verify(graph, identity, max_vertices=12, max_m=6, seed=0):
    """Report dict with identity, graph, lhs, rhs, pass, seed, notes."""
    return json.loads(_kast._verify_json(graph, identity, max_vertices, max_m, seed))
