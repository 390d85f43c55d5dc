"""Unbent collections of orthogonal drawings for plane 4-graphs."""

from .approx import approx3_collection, reroute_around_vertex, star_forest_partition
from .collections import (
    UnbentCollection,
    find_balanced_coloring,
    is_balanced,
    schnyder_collection,
    unbent_number_small,
)
from .cubic import cubic_collection, place_dummies, q_lower_bound
from .drawing import compact, render_svg, validate_drawing
from .graphcore import PlaneGraph, fixtures, parse, serialize
from .oracle import exact_tbn, exact_un
from .ortho import OrthogonalRepresentation, min_bend_representation

__version__ = "0.1.0"

__all__ = [
    "OrthogonalRepresentation",
    "PlaneGraph",
    "UnbentCollection",
    "approx3_collection",
    "compact",
    "cubic_collection",
    "exact_tbn",
    "exact_un",
    "find_balanced_coloring",
    "fixtures",
    "is_balanced",
    "min_bend_representation",
    "parse",
    "place_dummies",
    "q_lower_bound",
    "render_svg",
    "reroute_around_vertex",
    "schnyder_collection",
    "serialize",
    "star_forest_partition",
    "unbent_number_small",
]
