"""
The chord functional l_a(s) = |x(s+a) - x(s)| and its minimisation over s.
"""

from .search import golden_section_search, GoldenResult
from .functional import (
    chord_length,
    chord_lengths,
    make_chord,
    min_chord,
    stationarity_residual,
    check_split,
    DEFAULT_S_GRID,
)
from .corner import corner_limit_factor

__all__ = [
    "golden_section_search",
    "GoldenResult",
    "chord_length",
    "chord_lengths",
    "make_chord",
    "min_chord",
    "stationarity_residual",
    "check_split",
    "DEFAULT_S_GRID",
    "corner_limit_factor"
]
