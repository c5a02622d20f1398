"""
Validators for boundary chains, polygons and polygon files.

Each validator collects ValidationIssue records; model constructors turn the
first error into the matching exception from traceconst.errors.
"""

from .base import BaseValidator, ValidationIssue
from .body import ConvexBodyValidator, CONVEXITY_CODES, junction_turn
from .polygon import PolygonValidator, is_convex, signed_area, turning_angles
from .content import PolygonFileValidator

__all__ = [
    "BaseValidator",
    "ValidationIssue",
    "ConvexBodyValidator",
    "CONVEXITY_CODES",
    "junction_turn",
    "PolygonValidator",
    "is_convex",
    "signed_area",
    "turning_angles",
    "PolygonFileValidator"
]
