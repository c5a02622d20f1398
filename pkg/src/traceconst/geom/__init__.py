"""
Planar bodies: construction, arc-length evaluation and polygon files.
"""

from .evaluate import boundary_point, boundary_tangent
from .shapes import (
    make_disk,
    make_stadium,
    make_regular_polygon,
    regular_polygon,
    polygon_to_body,
    unit_square,
    random_convex_body,
    random_simple_polygon,
    dent_polygon,
    l_shape,
    star_polygon,
    shape_from_name,
)
from .io import load_polygon, save_polygon

__all__ = [
    "boundary_point",
    "boundary_tangent",
    "make_disk",
    "make_stadium",
    "make_regular_polygon",
    "regular_polygon",
    "polygon_to_body",
    "unit_square",
    "random_convex_body",
    "random_simple_polygon",
    "dent_polygon",
    "l_shape",
    "star_polygon",
    "shape_from_name",
    "load_polygon",
    "save_polygon"
]
