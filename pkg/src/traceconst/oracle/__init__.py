"""
Brute-force cut enumeration: lower bounds for the trace constants of convex bodies.
"""

from .cuts import boundary_samples, enumerate_segment_cuts, enumerate_polyline_cuts

__all__ = [
    "boundary_samples",
    "enumerate_segment_cuts",
    "enumerate_polyline_cuts"
]
