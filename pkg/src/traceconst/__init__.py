"""
Sharp trace Poincare constants of planar convex bodies.

Computes C_med and C_mv through the chord reduction, checks the Cauchy
perimeter formulas on polygons and cross-validates both by brute-force cuts.
"""

__version__ = "1.0.0"

from .utils.logging import LoggerSetup, get_logger
from .utils.config import RunConfig, LoggingConfig
from .models import ConvexBody, Polygon, StadiumParams, TraceConstantReport
from .constants import ball_constant, c_med_convex, c_mv_convex, trace_constants

__all__ = [
    "LoggerSetup",
    "get_logger",
    "RunConfig",
    "LoggingConfig",
    "ConvexBody",
    "Polygon",
    "StadiumParams",
    "TraceConstantReport",
    "ball_constant",
    "c_med_convex",
    "c_mv_convex",
    "trace_constants"
]
