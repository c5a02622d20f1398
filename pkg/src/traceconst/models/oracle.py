from typing import Optional, Tuple

from .base import FrozenModel, Point2


class CutCandidate(FrozenModel):
    """Straight or once-bent cut between two boundary points"""
    boundary_points: Tuple[float, float]
    cut_length: float
    arc_lengths: Tuple[float, float]
    ratio_med: float
    ratio_mv: float
    bend: Optional[Point2] = None


class OracleReport(FrozenModel):
    """Best cuts found among boundary samples, a lower bound on both constants.

    Values grow with resolution only while the sample sets stay nested,
    see boundary_samples.
    """

    best_med: float
    best_mv: float
    best_cut_med: CutCandidate
    best_cut_mv: CutCandidate
    resolution: int
    candidates_evaluated: int
