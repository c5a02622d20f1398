import math
import re
from typing import List, Tuple

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from ..errors import DegenerateHull, InvalidParams, InvalidPolygon, NotConvex, ParseError
from ..models.base import Point2
from ..models.body import ConvexBody
from ..models.pieces import Arc, Segment
from ..models.polygon import Polygon
from ..models.stadium import StadiumParams
from ..validation.polygon import is_convex
from ..utils.logging import get_logger

logger = get_logger('geom.shapes')

MAX_HULL_ATTEMPTS = 16
# Segments shorter than this fraction of the perimeter are dropped when
# rounding corners; they only arise from rounding off at full smoothing.
MIN_SEGMENT_FRACTION = 1e-13


def make_disk(radius: float = 1.0, center: Tuple[float, float] = (0.0, 0.0)) -> ConvexBody:
    """Circle as a single full arc, s=0 at angle 0"""
    return ConvexBody(pieces=(
        Arc(center=Point2.of(center), radius=radius, start_angle=0.0, sweep=2 * math.pi),
    ))


def make_stadium(params: StadiumParams) -> ConvexBody:
    """Stadium with centers (-d/2, 0), (d/2, 0); s=0 at the left end of the lower flat part"""
    R, d = params.R, params.d
    right = Arc(center=Point2(x=0.5 * d, y=0.0), radius=R, start_angle=-0.5 * math.pi, sweep=math.pi)
    left = Arc(center=Point2(x=-0.5 * d, y=0.0), radius=R, start_angle=0.5 * math.pi, sweep=math.pi)
    if d == 0:
        pieces = (right, left)
    else:
        pieces = (
            Segment(start=left.end_point, end=right.start_point),
            right,
            Segment(start=right.end_point, end=left.start_point),
            left,
        )
    body = ConvexBody(pieces=pieces)
    logger.info(
        f"Built stadium R={R}, d={d}",
        extra={'R': R, 'd': d, 'perimeter': body.perimeter}
    )
    return body


def polygon_to_body(polygon: Polygon) -> ConvexBody:
    """Segment chain of a convex polygon; arc length starts at the first vertex"""
    if not is_convex(polygon.coordinates):
        logger.error(
            "Polygon is not convex",
            extra={'vertex_count': len(polygon.vertices)}
        )
        raise NotConvex("Polygon fails the monotone-turning check")
    return ConvexBody(pieces=tuple(Segment(start=a, end=b) for a, b in polygon.edges))


def regular_polygon(k: int, circumradius: float) -> Polygon:
    """Regular k-gon centered at the origin with a horizontal bottom edge"""
    if k < 3:
        raise InvalidPolygon(f"A regular polygon needs k >= 3, got {k}")
    if not circumradius > 0:
        raise InvalidPolygon(f"Circumradius must be positive, got {circumradius}")
    phase = -0.5 * math.pi - math.pi / k
    return Polygon.from_coordinates([
        (circumradius * math.cos(phase + 2 * math.pi * j / k),
         circumradius * math.sin(phase + 2 * math.pi * j / k))
        for j in range(k)
    ])


def make_regular_polygon(k: int, circumradius: float) -> ConvexBody:
    return polygon_to_body(regular_polygon(k, circumradius))


def unit_square() -> Polygon:
    return Polygon.from_coordinates([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])


def _rounded_corners(vertices: np.ndarray, smoothing: float) -> ConvexBody:
    """Replace every corner of a convex polygon by a tangent arc of one common radius.

    The radius is `smoothing` times the largest radius for which neighbouring
    arcs do not overlap along any edge.
    """
    n = len(vertices)
    edges = np.roll(vertices, -1, axis=0) - vertices
    edge_len = np.hypot(edges[:, 0], edges[:, 1])
    unit = edges / edge_len[:, None]
    u_in = np.roll(unit, 1, axis=0)
    turn = np.arctan2(u_in[:, 0] * unit[:, 1] - u_in[:, 1] * unit[:, 0],
                      (u_in * unit).sum(axis=1))
    half_tan = np.tan(0.5 * turn)

    # edge i runs from vertex i to vertex i+1
    r_max = float(np.min(edge_len / (half_tan + np.roll(half_tan, -1))))
    radius = smoothing * r_max
    tangent_len = radius * half_tan

    arcs: List[Arc] = []
    for i in range(n):
        entry = vertices[i] - tangent_len[i] * u_in[i]
        center = entry + radius * np.array([-u_in[i][1], u_in[i][0]])
        start = math.atan2(entry[1] - center[1], entry[0] - center[0])
        arcs.append(Arc(center=Point2.of(center), radius=radius, start_angle=start,
                        sweep=float(turn[i])))

    perimeter = float(edge_len.sum())
    pieces = []
    for i in range(n):
        pieces.append(arcs[i])
        nxt = arcs[(i + 1) % n]
        gap = arcs[i].end_point.distance(nxt.start_point)
        if gap > MIN_SEGMENT_FRACTION * perimeter:
            pieces.append(Segment(start=arcs[i].end_point, end=nxt.start_point))
    return ConvexBody(pieces=tuple(pieces))


def random_convex_body(seed: int, n_points: int, smoothing: float = 0.0) -> ConvexBody:
    """Convex hull of n_points uniform points in the unit disk, corners optionally rounded"""
    if n_points < 3:
        raise DegenerateHull(f"Need at least 3 points, got {n_points}")
    if not 0.0 <= smoothing <= 1.0:
        raise InvalidParams(f"smoothing must lie in [0, 1], got {smoothing}")

    rng = np.random.default_rng(seed)
    for attempt in range(1, MAX_HULL_ATTEMPTS + 1):
        radius = np.sqrt(rng.random(n_points))
        angle = 2 * math.pi * rng.random(n_points)
        points = np.column_stack([radius * np.cos(angle), radius * np.sin(angle)])
        try:
            hull = ConvexHull(points)
        except QhullError:
            logger.debug(f"Degenerate hull on attempt {attempt}", extra={'seed': seed})
            continue
        if len(hull.vertices) >= 3 and hull.volume > 1e-9:
            break
    else:
        raise DegenerateHull(
            f"No non-degenerate hull after {MAX_HULL_ATTEMPTS} attempts (seed={seed})"
        )

    # qhull lists 2-D hull vertices counterclockwise
    vertices = points[hull.vertices]
    if smoothing == 0.0:
        body = polygon_to_body(Polygon.from_coordinates(vertices))
    else:
        body = _rounded_corners(vertices, smoothing)

    logger.debug(
        "Random convex body",
        extra={'seed': seed, 'n_points': n_points, 'hull_vertices': len(vertices),
               'smoothing': smoothing, 'perimeter': body.perimeter}
    )
    return body


def random_simple_polygon(seed: int, n_vertices: int, min_radius: float = 0.3) -> Polygon:
    """Star-shaped simple polygon: sorted random angles, random radii in [min_radius, 1]"""
    if n_vertices < 3:
        raise InvalidPolygon(f"Need at least 3 vertices, got {n_vertices}")
    rng = np.random.default_rng(seed)
    # jittered angles keep consecutive vertices apart
    base = 2 * math.pi * np.arange(n_vertices) / n_vertices
    angles = base + rng.uniform(0.1, 0.9, n_vertices) * (2 * math.pi / n_vertices)
    radii = rng.uniform(min_radius, 1.0, n_vertices)
    return Polygon.from_coordinates(np.column_stack([radii * np.cos(angles), radii * np.sin(angles)]))


def dent_polygon(polygon: Polygon, index: int, depth: float = 1.0) -> Polygon:
    """Move vertex `index` across the chord of its neighbours.

    depth=1 reflects the vertex in that chord. Raises InvalidPolygon when the
    result is not simple.
    """
    coords = [list(c) for c in polygon.coordinates]
    n = len(coords)
    prev, cur, nxt = np.array(coords[index - 1]), np.array(coords[index]), np.array(coords[(index + 1) % n])
    chord = nxt - prev
    foot = prev + chord * np.dot(cur - prev, chord) / np.dot(chord, chord)
    coords[index] = list(foot - depth * (cur - foot))
    return Polygon.from_coordinates(coords)


def l_shape() -> Polygon:
    """Unit square minus its upper-right quadrant"""
    return Polygon.from_coordinates([
        (0.0, 0.0), (1.0, 0.0), (1.0, 0.5), (0.5, 0.5), (0.5, 1.0), (0.0, 1.0)
    ])


def star_polygon(points: int = 5, outer: float = 1.0, inner: float = 0.4) -> Polygon:
    coords = []
    for j in range(2 * points):
        r = outer if j % 2 == 0 else inner
        angle = 0.5 * math.pi + math.pi * j / points
        coords.append((r * math.cos(angle), r * math.sin(angle)))
    return Polygon.from_coordinates(coords)


_STADIUM = re.compile(r'^stadium:([^:]+):([^:]+)$')
_REGULAR = re.compile(r'^regular:(\d+)$')


def shape_from_name(name: str) -> ConvexBody:
    """Built-in bodies: disk, square, triangle, stadium:R:d, regular:k"""
    name = name.strip().lower()
    if name == 'disk':
        return make_disk(1.0)
    if name == 'square':
        return polygon_to_body(unit_square())
    if name == 'triangle':
        return make_regular_polygon(3, 1.0)
    match = _STADIUM.match(name)
    if match:
        try:
            R, d = float(match.group(1)), float(match.group(2))
        except ValueError:
            raise ParseError(f"Stadium parameters must be numbers: {name!r}")
        return make_stadium(StadiumParams(R=R, d=d))
    match = _REGULAR.match(name)
    if match:
        return make_regular_polygon(int(match.group(1)), 1.0)
    raise ParseError(
        f"Unknown shape {name!r}; expected disk, square, triangle, stadium:R:d or regular:k"
    )
