"""
Trace constants C_med and C_mv: chord reduction for convex bodies and closed forms.
"""

from .ball import ball_constant, ball_constant_forms, mv_lower_bound, unit_ball_volume, volume_ratio
from .convex import (
    c_mv_convex,
    c_med_convex,
    trace_constants,
    trace_profile,
    a_grid_values,
    TraceConstants,
    DEFAULT_A_GRID,
)
from .stadium import stadium_c_mv_closed_form, stadium_min_chord_closed_form

__all__ = [
    "ball_constant",
    "ball_constant_forms",
    "mv_lower_bound",
    "volume_ratio",
    "unit_ball_volume",
    "c_mv_convex",
    "c_med_convex",
    "trace_constants",
    "trace_profile",
    "a_grid_values",
    "TraceConstants",
    "DEFAULT_A_GRID",
    "stadium_c_mv_closed_form",
    "stadium_min_chord_closed_form"
]
