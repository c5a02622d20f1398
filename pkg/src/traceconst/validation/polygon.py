import math
from typing import Sequence, Tuple

from .base import BaseValidator
from .body import TURNING_TOL, junction_turn
from ..utils.logging import get_logger

Vertex = Tuple[float, float]


def signed_area(vertices: Sequence[Vertex]) -> float:
    n = len(vertices)
    return 0.5 * math.fsum(
        vertices[i][0] * vertices[(i + 1) % n][1] - vertices[(i + 1) % n][0] * vertices[i][1]
        for i in range(n)
    )


def _orient(a: Vertex, b: Vertex, c: Vertex) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a: Vertex, b: Vertex, p: Vertex, tol: float) -> bool:
    return (min(a[0], b[0]) - tol <= p[0] <= max(a[0], b[0]) + tol
            and min(a[1], b[1]) - tol <= p[1] <= max(a[1], b[1]) + tol)


def segments_intersect(p1: Vertex, p2: Vertex, q1: Vertex, q2: Vertex, tol: float = 0.0) -> bool:
    """Closed-segment intersection test, touching counts"""
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    if ((d1 > tol and d2 < -tol) or (d1 < -tol and d2 > tol)) and \
            ((d3 > tol and d4 < -tol) or (d3 < -tol and d4 > tol)):
        return True
    if abs(d1) <= tol and _on_segment(q1, q2, p1, tol):
        return True
    if abs(d2) <= tol and _on_segment(q1, q2, p2, tol):
        return True
    if abs(d3) <= tol and _on_segment(p1, p2, q1, tol):
        return True
    if abs(d4) <= tol and _on_segment(p1, p2, q2, tol):
        return True
    return False


def turning_angles(vertices: Sequence[Vertex]):
    """Exterior angle at each vertex of a closed chain"""
    n = len(vertices)
    angles = []
    for i in range(n):
        prev, cur, nxt = vertices[i - 1], vertices[i], vertices[(i + 1) % n]
        t_in = (cur[0] - prev[0], cur[1] - prev[1])
        t_out = (nxt[0] - cur[0], nxt[1] - cur[1])
        angles.append(junction_turn(t_in, t_out))
    return angles


def is_convex(vertices: Sequence[Vertex], tol: float = TURNING_TOL) -> bool:
    angles = turning_angles(vertices)
    return min(angles) >= -tol and abs(math.fsum(angles) - 2 * math.pi) <= tol


class PolygonValidator(BaseValidator):
    """Checks vertex count, counterclockwise orientation and simplicity"""

    def __init__(self, require_convex: bool = False):
        super().__init__()
        self.require_convex = require_convex
        self.logger = get_logger('validation.polygon')

    def validate(self, vertices: Sequence[Vertex]) -> bool:
        valid = self._validate_count(vertices)
        if valid:
            valid = self._validate_orientation(vertices)
        if valid:
            valid = self._validate_simple(vertices)
        if valid and self.require_convex and not is_convex(vertices):
            self.add_error("Polygon is not convex", code='not_convex')
            valid = False

        self.logger.debug(
            f"Polygon validation {'passed' if valid else 'failed'}",
            extra={
                'validation_type': 'polygon',
                'vertex_count': len(vertices),
                'error_count': len(self.get_errors())
            }
        )
        return valid

    def _validate_count(self, vertices) -> bool:
        if len(vertices) < 3:
            self.add_error(f"Polygon needs at least 3 vertices, got {len(vertices)}", code='count')
            return False
        return True

    def _validate_orientation(self, vertices) -> bool:
        area = signed_area(vertices)
        if area <= 0:
            self.add_error(
                f"Polygon must be counterclockwise with positive area, got {area:.6g}",
                code='orientation'
            )
            return False
        return True

    def _validate_simple(self, vertices) -> bool:
        n = len(vertices)
        scale = max(max(abs(v[0]), abs(v[1])) for v in vertices) or 1.0
        tol = 1e-14 * scale * scale
        for i in range(n):
            if math.hypot(vertices[(i + 1) % n][0] - vertices[i][0],
                          vertices[(i + 1) % n][1] - vertices[i][1]) == 0:
                self.add_error(f"Vertex {i} is repeated", code='not_simple')
                return False
        for i in range(n):
            a1, a2 = vertices[i], vertices[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or j == (i + 1) % n:
                    continue
                b1, b2 = vertices[j], vertices[(j + 1) % n]
                if segments_intersect(a1, a2, b1, b2, tol):
                    self.add_error(f"Edges {i} and {j} intersect", code='not_simple')
                    return False
        # adjacent edges may only share their common vertex
        for i in range(n):
            prev, cur, nxt = vertices[i - 1], vertices[i], vertices[(i + 1) % n]
            if abs(_orient(prev, cur, nxt)) <= tol:
                back = (prev[0] - cur[0]) * (nxt[0] - cur[0]) + (prev[1] - cur[1]) * (nxt[1] - cur[1])
                if back > 0:
                    self.add_error(f"Edges meeting at vertex {i} fold back", code='not_simple')
                    return False
        return True
