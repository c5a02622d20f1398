import math
import time

import numpy as np

from .search import golden_section_search
from ..errors import AtVertex, OutOfRange
from ..models.base import Point2
from ..models.body import ConvexBody
from ..models.chord import Chord, MinChordResult
from ..utils.logging import get_logger

logger = get_logger('chords.functional')

DEFAULT_S_GRID = 4096
MIN_S_GRID = 64
REFINE_TOL = 1e-10
SPLIT_TOL = 1e-12


def check_split(body: ConvexBody, a: float) -> None:
    L = body.perimeter
    if not (0 < a <= 0.5 * L * (1 + SPLIT_TOL)):
        raise OutOfRange(f"Arc split a={a} outside (0, L/2] with L={L}")


def chord_lengths(body: ConvexBody, s, a: float) -> np.ndarray:
    """l_a(s) = |x(s+a) - x(s)| for an array of anchors"""
    s = np.asarray(s, dtype=float)
    diff = body.points(s + a) - body.points(s)
    return np.hypot(diff[..., 0], diff[..., 1])


def chord_length(body: ConvexBody, s: float, a: float) -> float:
    check_split(body, a)
    return float(chord_lengths(body, float(s), a))


def make_chord(body: ConvexBody, s: float, a: float) -> Chord:
    s = float(np.mod(s, body.perimeter))
    p, q = body.points(s), body.points(s + a)
    return Chord(
        s=s,
        a=a,
        length=float(math.hypot(*(q - p))),
        endpoints=(Point2.of(p), Point2.of(q)),
    )


def stationarity_residual(body: ConvexBody, s: float, a: float) -> float:
    """(x(s+a) - x(s)) . (x'(s+a) - x'(s)) / l_a(s), i.e. d l_a / ds"""
    check_split(body, a)
    for anchor in (s, s + a):
        if body.at_corner(anchor):
            raise AtVertex(f"Chord endpoint s={anchor} lies at a non-smooth junction", s=anchor)
    p, q = body.points(float(s)), body.points(float(s + a))
    tp, tq = body.tangents(float(s)), body.tangents(float(s + a))
    diff = q - p
    return float(np.dot(diff, tq - tp) / math.hypot(*diff))


def _sample_anchors(body: ConvexBody, a: float, grid: int) -> np.ndarray:
    """Uniform anchors plus every s and s - a that puts an endpoint on a junction"""
    L = body.perimeter
    junctions = body.junctions
    anchors = np.concatenate([
        L * np.arange(grid) / grid,
        junctions,
        np.mod(junctions - a, L),
    ])
    anchors = np.unique(np.mod(anchors, L))
    # np.mod can return L itself for tiny negative inputs
    return anchors[anchors < L]


def min_chord(body: ConvexBody, a: float, grid: int = DEFAULT_S_GRID) -> MinChordResult:
    """Global minimum of l_a over s: junction-aware grid scan, then golden-section refinement"""
    check_split(body, a)
    if grid < MIN_S_GRID:
        raise OutOfRange(f"s-grid must have at least {MIN_S_GRID} points, got {grid}")
    start_time = time.time()
    L = body.perimeter

    s = _sample_anchors(body, a, grid)
    values = chord_lengths(body, s, a)

    s_prev = np.roll(s, 1)
    s_prev[0] -= L
    s_next = np.roll(s, -1)
    s_next[-1] += L
    tol = REFINE_TOL * L
    best = int(np.argmin(values))
    grid_min = float(values[best])

    if float(values.max()) - grid_min <= tol:
        # constant chord length (the disk): nothing to refine
        candidates = np.array([best])
        argmin_s = float(s[best])
        width = float(s_next[best] - s_prev[best])
        min_length = grid_min
    else:
        down = values - np.roll(values, 1)
        up = np.roll(values, -1) - values
        is_local = (down <= 0) & (up >= 0)
        # round-off wiggles on a stretch of constant length are not minima of their own
        plateau = (np.abs(down) <= tol) & (np.abs(up) <= tol)

        # l_a is 2-Lipschitz in s, so a bracket whose centre exceeds the grid
        # minimum by more than twice its half-width cannot hold the minimum
        reach = 2.0 * np.maximum(s_next - s, s - s_prev)
        candidates = np.union1d(
            [best], np.flatnonzero(is_local & ~plateau & (values - reach <= grid_min))
        )

        refined = golden_section_search(
            lambda x: chord_lengths(body, x, a),
            s_prev[candidates], s_next[candidates], tol,
        )
        use_grid = values[candidates] <= refined.fx
        best_values = np.where(use_grid, values[candidates], refined.fx)
        best_s = np.where(use_grid, s[candidates], refined.x)
        k = int(np.argmin(best_values))

        argmin_s = float(np.mod(best_s[k], L))
        width = float(refined.hi[k] - refined.lo[k])
        min_length = float(best_values[k])

    try:
        residual = stationarity_residual(body, argmin_s, a)
    except AtVertex:
        residual = None

    logger.debug(
        "min_chord",
        extra={
            'a': a,
            'min_length': min_length,
            'argmin_s': argmin_s,
            'brackets': int(candidates.size),
            'duration_ms': (time.time() - start_time) * 1000
        }
    )
    return MinChordResult(
        a=a,
        min_length=min_length,
        argmin_s=argmin_s,
        residual=residual,
        bracket_width=width,
        chord=Chord(
            s=argmin_s,
            a=a,
            length=min_length,
            endpoints=(Point2.of(body.points(argmin_s)), Point2.of(body.points(argmin_s + a))),
        ),
    )
