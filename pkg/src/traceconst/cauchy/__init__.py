"""
Cauchy perimeter formulas for polygons: crossing counts and essential projections.
"""

from .perimeter import (
    crossing_integral,
    essential_projection_extent,
    project,
    count_crossings,
    perimeter_by_crossings,
    perimeter_by_projections,
    convexity_gap,
    quadrature_angles,
)
from .triangulation import triangulate

__all__ = [
    "crossing_integral",
    "essential_projection_extent",
    "project",
    "count_crossings",
    "perimeter_by_crossings",
    "perimeter_by_projections",
    "convexity_gap",
    "quadrature_angles",
    "triangulate"
]
