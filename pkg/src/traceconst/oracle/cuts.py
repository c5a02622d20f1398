import time
from typing import List, Optional, Tuple, Union

import numpy as np

from ..errors import InvalidParams, ResolutionTooHigh
from ..geom.shapes import polygon_to_body
from ..models.base import Point2
from ..models.body import ConvexBody
from ..models.oracle import CutCandidate, OracleReport
from ..models.polygon import Polygon
from ..utils.logging import get_logger
from ..utils.parallel import ordered_map

logger = get_logger('oracle.cuts')

MIN_RESOLUTION = 32
MAX_POLYLINE_RESOLUTION = 128
# Pairs whose straight cut is as long as the shorter arc run along one flat piece.
FLAT_TOL = 1e-12
# Interior bend points: boundary samples pulled toward the centroid by these fractions.
BEND_FRACTIONS = (0.1, 1.0 / 3.0, 2.0 / 3.0, 0.9)


def _as_body(body: Union[ConvexBody, Polygon]) -> ConvexBody:
    if isinstance(body, Polygon):
        return polygon_to_body(body)
    return body


def boundary_samples(body: ConvexBody, resolution: int) -> np.ndarray:
    """Arc positions uniform on each piece, about `resolution` in total.

    Each piece gets a share proportional to its length and starts at its
    junction, so corners of a regular polygon are sampled symmetrically.
    Two resolutions give nested sets only when every piece count at the
    higher one is a multiple of its count at the lower one. Per-piece
    rounding can break this even for a doubled resolution; it holds when
    resolution * length / L is a whole number for each piece, as for the
    disk or a regular k-gon with resolution divisible by k.
    """
    L = body.perimeter
    samples = []
    for start, piece in zip(body.junctions, body.pieces):
        count = max(1, int(round(resolution * piece.length / L)))
        samples.append(start + piece.length * np.arange(count) / count)
    return np.unique(np.concatenate(samples))


class _Best:
    """Running maximum; the first candidate wins ties"""

    def __init__(self):
        self.value = -np.inf
        self.candidate: Optional[CutCandidate] = None

    def offer(self, value: float, make) -> None:
        if value > self.value:
            self.value = value
            self.candidate = make()


def _candidate(L: float, s_i: float, s_j: float, cut: float,
               bend: Optional[np.ndarray] = None) -> CutCandidate:
    a = s_j - s_i
    return CutCandidate(
        boundary_points=(float(s_i), float(s_j)),
        cut_length=float(cut),
        arc_lengths=(float(a), float(L - a)),
        ratio_med=float(min(a, L - a) / cut),
        ratio_mv=float(2.0 / L * a * (L - a) / cut),
        bend=Point2.of(bend) if bend is not None else None,
    )


def _ratios(L: float, a: np.ndarray, cut: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return np.minimum(a, L - a) / cut, (2.0 / L) * a * (L - a) / cut


def _segment_row(L: float, s: np.ndarray, points: np.ndarray, i: int):
    """Best straight cuts from sample i to every later sample"""
    a = s[i + 1:] - s[i]
    diff = points[i + 1:] - points[i]
    cut = np.hypot(diff[:, 0], diff[:, 1])
    valid = cut < np.minimum(a, L - a) - FLAT_TOL * L
    if not valid.any():
        return None
    med, mv = _ratios(L, a, cut)
    med = np.where(valid, med, -np.inf)
    mv = np.where(valid, mv, -np.inf)
    j_med, j_mv = int(np.argmax(med)), int(np.argmax(mv))
    return (int(valid.sum()),
            (float(med[j_med]), i, i + 1 + j_med, float(cut[j_med])),
            (float(mv[j_mv]), i, i + 1 + j_mv, float(cut[j_mv])))


def _reduce(L: float, s: np.ndarray, rows: List, best_med: _Best, best_mv: _Best) -> int:
    evaluated = 0
    for row in rows:
        if row is None:
            continue
        count, med, mv = row[:3]
        bend_med, bend_mv = (row[3], row[4]) if len(row) > 3 else (None, None)
        evaluated += count
        best_med.offer(med[0], lambda: _candidate(L, s[med[1]], s[med[2]], med[3], bend_med))
        best_mv.offer(mv[0], lambda: _candidate(L, s[mv[1]], s[mv[2]], mv[3], bend_mv))
    return evaluated


def enumerate_segment_cuts(body: Union[ConvexBody, Polygon], resolution: int,
                           threads: Optional[int] = None) -> OracleReport:
    """Best single-segment cuts between boundary samples; lower bounds for both constants"""
    if resolution < MIN_RESOLUTION:
        raise InvalidParams(f"resolution must be at least {MIN_RESOLUTION}, got {resolution}")
    body = _as_body(body)
    start_time = time.time()
    L = body.perimeter
    s = boundary_samples(body, resolution)
    points = body.points(s)

    rows = ordered_map(lambda i: _segment_row(L, s, points, i), range(len(s) - 1), threads)
    best_med, best_mv = _Best(), _Best()
    evaluated = _reduce(L, s, rows, best_med, best_mv)

    report = OracleReport(
        best_med=best_med.value,
        best_mv=best_mv.value,
        best_cut_med=best_med.candidate,
        best_cut_mv=best_mv.candidate,
        resolution=resolution,
        candidates_evaluated=evaluated,
    )
    logger.info(
        "Segment cut oracle",
        extra={'resolution': resolution, 'samples': int(s.size), 'candidates': evaluated,
               'best_med': report.best_med, 'best_mv': report.best_mv,
               'duration_ms': (time.time() - start_time) * 1000}
    )
    return report


def _polyline_row(L: float, s: np.ndarray, points: np.ndarray, bends: np.ndarray, i: int):
    """Best two-segment cuts P_i -> Q -> P_j over all later j and every bend Q"""
    if i + 1 >= len(s):
        return None
    a = s[i + 1:] - s[i]
    to_bend = np.hypot(*(bends - points[i]).T)
    from_bend = bends[None, :, :] - points[i + 1:, None, :]
    cut = to_bend[None, :] + np.hypot(from_bend[..., 0], from_bend[..., 1])

    # a bend on the line through both ends, beyond one of them, folds back on itself
    u = points[i + 1:, None, :] - points[i]
    w = bends[None, :, :] - points[i]
    cross = u[..., 0] * w[..., 1] - u[..., 1] * w[..., 0]
    along = (u * w).sum(axis=2)
    folded = (np.abs(cross) <= FLAT_TOL * L * L) & ((along < 0) | (along > (u * u).sum(axis=2)))
    valid = ~folded & (cut > 0)

    med, mv = _ratios(L, a[:, None], cut)
    med = np.where(valid, med, -np.inf)
    mv = np.where(valid, mv, -np.inf)
    j_med, q_med = np.unravel_index(int(np.argmax(med)), med.shape)
    j_mv, q_mv = np.unravel_index(int(np.argmax(mv)), mv.shape)
    return (int(valid.sum()),
            (float(med[j_med, q_med]), i, i + 1 + int(j_med), float(cut[j_med, q_med])),
            (float(mv[j_mv, q_mv]), i, i + 1 + int(j_mv), float(cut[j_mv, q_mv])),
            bends[q_med], bends[q_mv])


def enumerate_polyline_cuts(body: Union[ConvexBody, Polygon], resolution: int,
                            max_segments: int = 2, threads: Optional[int] = None) -> OracleReport:
    """Extend the segment oracle with two-segment cuts bent at interior points.

    For a convex body the bent cuts must not beat the straight ones; the
    improvement is logged so a violation stands out.
    """
    if resolution > MAX_POLYLINE_RESOLUTION:
        raise ResolutionTooHigh(
            f"Polyline oracle resolution {resolution} exceeds {MAX_POLYLINE_RESOLUTION}"
        )
    if max_segments not in (1, 2):
        raise InvalidParams(f"max_segments must be 1 or 2, got {max_segments}")
    body = _as_body(body)
    single = enumerate_segment_cuts(body, resolution, threads)
    if max_segments == 1:
        return single

    start_time = time.time()
    L = body.perimeter
    s = boundary_samples(body, resolution)
    points = body.points(s)
    centroid = points.mean(axis=0)
    bends = np.concatenate([points + f * (centroid - points) for f in BEND_FRACTIONS])

    rows = ordered_map(lambda i: _polyline_row(L, s, points, bends, i), range(len(s) - 1), threads)
    best_med, best_mv = _Best(), _Best()
    best_med.offer(single.best_med, lambda: single.best_cut_med)
    best_mv.offer(single.best_mv, lambda: single.best_cut_mv)
    evaluated = single.candidates_evaluated + _reduce(L, s, rows, best_med, best_mv)

    report = OracleReport(
        best_med=best_med.value,
        best_mv=best_mv.value,
        best_cut_med=best_med.candidate,
        best_cut_mv=best_mv.candidate,
        resolution=resolution,
        candidates_evaluated=evaluated,
    )
    improvement = max(report.best_med - single.best_med, report.best_mv - single.best_mv)
    log = logger.warning if improvement > 1e-6 else logger.info
    log(
        "Polyline cut oracle",
        extra={'resolution': resolution, 'bends': int(len(bends)), 'candidates': evaluated,
               'best_med': report.best_med, 'best_mv': report.best_mv,
               'improvement': improvement,
               'duration_ms': (time.time() - start_time) * 1000}
    )
    return report
