import numpy as np

from ..errors import TriangulationFailure
from ..validation.polygon import signed_area
from ..utils.logging import get_logger

logger = get_logger('cauchy.triangulation')

# Relative to diameter squared.
NEEDLE_AREA = 1e-14


def _cross(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Twice the signed area of (a, b, c); c may be an array of points"""
    return (b[0] - a[0]) * (c[..., 1] - a[1]) - (b[1] - a[1]) * (c[..., 0] - a[0])


def _blocks_ear(pts: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray, eps: float) -> bool:
    """True if any of pts lies in the closed triangle (a, b, c)"""
    if pts.size == 0:
        return False
    d1 = _cross(a, b, pts)
    d2 = _cross(b, c, pts)
    d3 = _cross(c, a, pts)
    return bool(np.any((d1 >= -eps) & (d2 >= -eps) & (d3 >= -eps)))


def triangulate(coords) -> np.ndarray:
    """Ear clipping of a simple polygon into an array of shape (T, 3, 2).

    Needle triangles with area below NEEDLE_AREA * diameter**2 are dropped.
    Raises TriangulationFailure when no ear can be found, which only happens
    for non-simple input.
    """
    pts = np.asarray(coords, dtype=float)
    n = len(pts)
    if n < 3:
        raise TriangulationFailure(f"Need at least 3 vertices, got {n}")
    if signed_area(pts) < 0:
        pts = pts[::-1]

    diameter = float(np.hypot(*np.ptp(pts, axis=0)))
    eps = NEEDLE_AREA * diameter ** 2

    remaining = list(range(n))
    triangles = []
    while len(remaining) > 3:
        m = len(remaining)
        for k in range(m):
            i, j, l = remaining[k - 1], remaining[k], remaining[(k + 1) % m]
            a, b, c = pts[i], pts[j], pts[l]
            cross = float(_cross(a, b, c))
            if cross < -eps:
                continue
            if cross <= eps:
                # collinear vertex between its neighbours: clip as a needle
                if np.dot(a - b, c - b) < 0:
                    break
                continue
            others = pts[[r for r in remaining if r not in (i, j, l)]]
            if not _blocks_ear(others, a, b, c, eps):
                triangles.append((a, b, c))
                break
        else:
            logger.error(
                "Ear clipping found no ear",
                extra={'vertex_count': n, 'remaining': m}
            )
            raise TriangulationFailure(
                f"No ear among {m} remaining vertices; the polygon is not simple"
            )
        remaining.pop(k)
    triangles.append(tuple(pts[remaining]))

    tris = np.array(triangles, dtype=float).reshape(-1, 3, 2)
    areas = 0.5 * np.abs(_cross_rows(tris))
    kept = tris[areas >= eps]
    if len(kept) < len(tris):
        logger.debug(
            "Dropped needle triangles",
            extra={'dropped': int(len(tris) - len(kept)), 'kept': int(len(kept))}
        )
    return kept


def _cross_rows(tris: np.ndarray) -> np.ndarray:
    u = tris[:, 1] - tris[:, 0]
    v = tris[:, 2] - tris[:, 0]
    return u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]
