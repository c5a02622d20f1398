import math
import time
from typing import NamedTuple, Optional, Union

import numpy as np

from .ball import ball_constant
from ..chords.corner import corner_limit_factor
from ..chords.functional import DEFAULT_S_GRID, min_chord
from ..chords.search import golden_section_search
from ..geom.shapes import polygon_to_body
from ..models.body import ConvexBody
from ..models.polygon import Polygon
from ..models.report import ConstantKind, MaximizerKind, TraceConstantReport, TraceProfile
from ..utils.logging import get_logger
from ..utils.parallel import ordered_map

logger = get_logger('constants.convex')

DEFAULT_A_GRID = 2048
A_FLOOR = 1e-6
A_REFINE_TOL = 1e-10


class TraceConstants(NamedTuple):
    med: TraceConstantReport
    mv: TraceConstantReport
    profile: TraceProfile


def _as_body(body: Union[ConvexBody, Polygon]) -> ConvexBody:
    if isinstance(body, Polygon):
        return polygon_to_body(body)
    return body


def a_grid_values(perimeter: float, a_grid: int) -> np.ndarray:
    """Half uniform on (0, L/2], half geometric from A_FLOOR * L up to L/2"""
    half = 0.5 * perimeter
    n_uniform = a_grid // 2
    n_geometric = a_grid - n_uniform
    values = np.concatenate([
        half * np.arange(1, n_uniform + 1) / n_uniform,
        np.geomspace(A_FLOOR * perimeter, half, n_geometric),
    ])
    return np.unique(np.minimum(values, half))


def trace_profile(body: Union[ConvexBody, Polygon], a_grid: int = DEFAULT_A_GRID,
                  s_grid: int = DEFAULT_S_GRID, threads: Optional[int] = None) -> TraceProfile:
    """m(a) = min_s l_a(s) on the a-grid"""
    body = _as_body(body)
    start_time = time.time()
    a_values = a_grid_values(body.perimeter, a_grid)
    results = ordered_map(lambda a: min_chord(body, float(a), s_grid), a_values, threads)

    profile = TraceProfile(
        perimeter=body.perimeter,
        a=a_values,
        min_length=np.array([r.min_length for r in results]),
        argmin_s=np.array([r.argmin_s for r in results]),
        corner_factor=corner_limit_factor(body),
    )
    logger.info(
        "Chord profile computed",
        extra={
            'perimeter': body.perimeter,
            'a_points': int(a_values.size),
            's_grid': s_grid,
            'corner_factor': profile.corner_factor,
            'duration_ms': (time.time() - start_time) * 1000
        }
    )
    return profile


def _ratio(kind: ConstantKind, perimeter: float, a: float, m: float) -> float:
    if kind is ConstantKind.MED:
        return a / m
    return (2.0 / perimeter) * a * (perimeter - a) / m


def _report(body: ConvexBody, profile: TraceProfile, kind: ConstantKind,
            a_grid: int, s_grid: int) -> TraceConstantReport:
    L = body.perimeter
    a = profile.a
    ratios = profile.med_ratio if kind is ConstantKind.MED else profile.mv_ratio

    # first maximum wins, i.e. ties go to the smaller a
    i = int(np.argmax(ratios))
    lo = a[i - 1] if i > 0 else 0.5 * a[0]
    hi = a[i + 1] if i + 1 < a.size else a[i]

    def negative_ratio(xs: np.ndarray) -> np.ndarray:
        return np.array([
            -_ratio(kind, L, float(x), min_chord(body, float(x), s_grid).min_length) for x in xs
        ])

    refined = golden_section_search(negative_ratio, [lo], [hi], A_REFINE_TOL * L)
    if -float(refined.fx[0]) > float(ratios[i]):
        a_star, interior = float(refined.x[0]), -float(refined.fx[0])
    else:
        a_star, interior = float(a[i]), float(ratios[i])
    width = float(refined.hi[0] - refined.lo[0])

    factor = profile.corner_factor
    limit = factor if kind is ConstantKind.MED else 2.0 * factor
    lower = ball_constant(2) if kind is ConstantKind.MED else 2.0

    if limit >= interior:
        report = TraceConstantReport(
            value=limit, kind=kind, maximizer=MaximizerKind.LIMIT,
            limit_value=limit, interior_value=interior, lower_bound_check=lower,
            a_bracket_width=width, grid_sizes=(a_grid, s_grid),
        )
    else:
        best = min_chord(body, a_star, s_grid)
        report = TraceConstantReport(
            value=interior, kind=kind, maximizer=MaximizerKind.INTERIOR_CHORD,
            chord=best.chord, a_star=a_star,
            limit_value=limit, interior_value=interior, lower_bound_check=lower,
            a_bracket_width=width, grid_sizes=(a_grid, s_grid),
        )

    if not report.satisfies_lower_bound:
        logger.warning(
            f"C_{kind.value} below the disk value",
            extra={'value': report.value, 'lower_bound': lower}
        )
    logger.info(
        f"C_{kind.value} = {report.value:.12g} ({report.maximizer.value})",
        extra={'kind': kind.value, 'value': report.value, 'a_star': report.a_star,
               'limit_value': limit, 'interior_value': interior}
    )
    return report


def c_mv_convex(body: Union[ConvexBody, Polygon], a_grid: int = DEFAULT_A_GRID,
                s_grid: int = DEFAULT_S_GRID, threads: Optional[int] = None) -> TraceConstantReport:
    """(2/L) sup_a a(L - a) / m(a), including the a -> 0 limit 2 * corner factor"""
    body = _as_body(body)
    profile = trace_profile(body, a_grid, s_grid, threads)
    return _report(body, profile, ConstantKind.MV, a_grid, s_grid)


def c_med_convex(body: Union[ConvexBody, Polygon], a_grid: int = DEFAULT_A_GRID,
                 s_grid: int = DEFAULT_S_GRID, threads: Optional[int] = None) -> TraceConstantReport:
    """sup_a a / m(a) over half-plane cuts, including the a -> 0 limit (corner factor)"""
    body = _as_body(body)
    profile = trace_profile(body, a_grid, s_grid, threads)
    return _report(body, profile, ConstantKind.MED, a_grid, s_grid)


def trace_constants(body: Union[ConvexBody, Polygon], a_grid: int = DEFAULT_A_GRID,
                    s_grid: int = DEFAULT_S_GRID, threads: Optional[int] = None) -> TraceConstants:
    """Both constants from one shared chord profile"""
    body = _as_body(body)
    profile = trace_profile(body, a_grid, s_grid, threads)
    med = _report(body, profile, ConstantKind.MED, a_grid, s_grid)
    mv = _report(body, profile, ConstantKind.MV, a_grid, s_grid)
    if med.value > mv.value + 1e-9:
        logger.warning(
            "C_med exceeds C_mv",
            extra={'c_med': med.value, 'c_mv': mv.value}
        )
    return TraceConstants(med=med, mv=mv, profile=profile)
