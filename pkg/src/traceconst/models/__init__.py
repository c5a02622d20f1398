"""
Data models for planar bodies, chords and trace-constant reports.

This package contains Pydantic models for:
- Points and boundary pieces (segments, circular arcs)
- Convex bodies with arc-length parametrization, and simple polygons
- Chord search results and trace-constant reports
- Cauchy projection results and cut-oracle reports
"""

from .base import FrozenModel, Point2
from .pieces import Segment, Arc, BoundaryPiece
from .body import ConvexBody
from .polygon import Polygon
from .stadium import StadiumParams
from .chord import Chord, MinChordResult
from .report import ConstantKind, MaximizerKind, TraceConstantReport, TraceProfile
from .cauchy import Direction, ProjectionResult
from .oracle import CutCandidate, OracleReport

__all__ = [
    "FrozenModel",
    "Point2",
    "Segment",
    "Arc",
    "BoundaryPiece",
    "ConvexBody",
    "Polygon",
    "StadiumParams",
    "Chord",
    "MinChordResult",
    "ConstantKind",
    "MaximizerKind",
    "TraceConstantReport",
    "TraceProfile",
    "Direction",
    "ProjectionResult",
    "CutCandidate",
    "OracleReport"
]
