import math
import time
from typing import Optional

import numpy as np

from .triangulation import triangulate
from ..errors import OutOfRange
from ..models.cauchy import Direction, ProjectionResult
from ..models.polygon import Polygon
from ..utils.logging import get_logger
from ..utils.parallel import ordered_map

logger = get_logger('cauchy.perimeter')

MIN_QUADRATURE = 16
# Interval merge tolerance, relative to the diameter.
MERGE_TOL = 1e-12
# omega_1, the length of the unit ball in dimension one.
OMEGA_1 = 2.0
# Directions per worker task.
CHUNK = 512


def _check_quadrature(quadrature_points: int) -> None:
    if quadrature_points < MIN_QUADRATURE:
        raise OutOfRange(
            f"quadrature_points must be at least {MIN_QUADRATURE}, got {quadrature_points}"
        )


def quadrature_angles(quadrature_points: int) -> np.ndarray:
    """Uniform angles offset by half a step: theta_j = (j + 1/2) 2 pi / N"""
    return (np.arange(quadrature_points) + 0.5) * (2 * math.pi / quadrature_points)


def _edge_vectors(poly: Polygon) -> np.ndarray:
    pts = np.asarray(poly.coordinates, dtype=float)
    return np.roll(pts, -1, axis=0) - pts


def _perp(thetas: np.ndarray) -> np.ndarray:
    return np.column_stack([-np.sin(thetas), np.cos(thetas)])


def _crossing_integrals(edges: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """sum_e len_e |tau_e . nu_perp| for each angle"""
    return np.abs(_perp(thetas) @ edges.T).sum(axis=1)


def _union_lengths(triangles: np.ndarray, thetas: np.ndarray, tol: float) -> np.ndarray:
    """Measure of the union of the triangles' shadows on nu_perp, per angle"""
    proj = np.einsum('tvc,kc->ktv', triangles, _perp(thetas))
    lo = proj.min(axis=2)
    hi = proj.max(axis=2)
    order = np.argsort(lo, axis=1, kind='stable')
    lo = np.take_along_axis(lo, order, axis=1)
    hi = np.maximum.accumulate(np.take_along_axis(hi, order, axis=1), axis=1)
    gaps = lo[:, 1:] - hi[:, :-1]
    holes = np.where(gaps > tol, gaps, 0.0).sum(axis=1)
    return (hi[:, -1] - lo[:, 0]) - holes


def _chunked(fn, thetas: np.ndarray, threads: Optional[int]) -> np.ndarray:
    chunks = [thetas[i:i + CHUNK] for i in range(0, len(thetas), CHUNK)]
    return np.concatenate(ordered_map(fn, chunks, threads))


def crossing_integral(poly: Polygon, dir: Direction) -> float:
    """Integral over nu_perp of the number of boundary crossings of z + R nu.

    Evaluated exactly as the sum of each edge's extent on nu_perp.
    """
    return float(_crossing_integrals(_edge_vectors(poly), np.array([dir.theta]))[0])


def essential_projection_extent(poly: Polygon, dir: Direction) -> float:
    """Length of the set of z whose line z + R nu meets the interior in positive length"""
    triangles = triangulate(poly.coordinates)
    return float(_union_lengths(triangles, np.array([dir.theta]), MERGE_TOL * poly.diameter)[0])


def project(poly: Polygon, dir: Direction) -> ProjectionResult:
    return ProjectionResult(
        direction=dir,
        essential_extent=essential_projection_extent(poly, dir),
        crossing_integral=crossing_integral(poly, dir),
    )


def count_crossings(poly: Polygon, dir: Direction, z_points: int = 20000) -> float:
    """Integral of the crossing count by counting edge crossings on a midpoint z-grid"""
    pts = np.asarray(poly.coordinates, dtype=float)
    z_vertices = pts @ np.array(dir.nu_perp.as_tuple())
    z_lo, z_hi = float(z_vertices.min()), float(z_vertices.max())
    step = (z_hi - z_lo) / z_points
    z = z_lo + (np.arange(z_points) + 0.5) * step

    z_end = np.roll(z_vertices, -1)
    lo = np.minimum(z_vertices, z_end)[:, None]
    hi = np.maximum(z_vertices, z_end)[:, None]
    counts = ((lo < z) & (z < hi)).sum(axis=0)
    return float(counts.sum() * step)


def perimeter_by_crossings(poly: Polygon, quadrature_points: int = 4096,
                           threads: Optional[int] = None) -> float:
    """(1 / 2 omega_1) times the angular integral of the crossing integral"""
    _check_quadrature(quadrature_points)
    start_time = time.time()
    edges = _edge_vectors(poly)
    values = _chunked(lambda t: _crossing_integrals(edges, t),
                      quadrature_angles(quadrature_points), threads)
    result = math.fsum(values) * (2 * math.pi / quadrature_points) / (2 * OMEGA_1)
    logger.debug(
        "Crossing perimeter",
        extra={'value': result, 'perimeter': poly.perimeter,
               'quadrature_points': quadrature_points,
               'duration_ms': (time.time() - start_time) * 1000}
    )
    return result


def perimeter_by_projections(poly: Polygon, quadrature_points: int = 4096,
                             threads: Optional[int] = None) -> float:
    """(1 / omega_1) times the angular integral of the essential projection"""
    _check_quadrature(quadrature_points)
    start_time = time.time()
    triangles = triangulate(poly.coordinates)
    tol = MERGE_TOL * poly.diameter
    values = _chunked(lambda t: _union_lengths(triangles, t, tol),
                      quadrature_angles(quadrature_points), threads)
    result = math.fsum(values) * (2 * math.pi / quadrature_points) / OMEGA_1
    logger.debug(
        "Projection perimeter",
        extra={'value': result, 'perimeter': poly.perimeter, 'triangles': len(triangles),
               'quadrature_points': quadrature_points,
               'duration_ms': (time.time() - start_time) * 1000}
    )
    return result


def convexity_gap(poly: Polygon, quadrature_points: int = 4096,
                  threads: Optional[int] = None) -> float:
    """Crossing perimeter minus projection perimeter; zero exactly for convex polygons"""
    crossings = perimeter_by_crossings(poly, quadrature_points, threads)
    projections = perimeter_by_projections(poly, quadrature_points, threads)
    gap = crossings - projections
    if gap < -1e-9:
        logger.warning(
            "Projection perimeter exceeds crossing perimeter",
            extra={'crossings': crossings, 'projections': projections, 'gap': gap}
        )
    logger.info(
        "Convexity gap",
        extra={'vertex_count': len(poly.vertices), 'perimeter': poly.perimeter,
               'crossings': crossings, 'projections': projections, 'gap': gap}
    )
    return gap
