from pathlib import Path

from ..errors import ParseError
from ..models.polygon import Polygon
from ..validation.content import PolygonFileValidator
from ..validation.polygon import signed_area
from ..utils.logging import get_logger

logger = get_logger('geom.io')


def load_polygon(path: Path) -> Polygon:
    """Read a polygon from "x y" lines or a JSON array of [x, y] pairs.

    Lines starting with '#' are comments and closure is implicit. Clockwise
    input is reversed.
    """
    path = Path(path)
    validator = PolygonFileValidator()
    if not validator.validate(path):
        messages = "; ".join(e.message for e in validator.get_errors())
        raise ParseError(f"{path}: {messages}")

    vertices = validator.vertices
    if len(vertices) >= 3 and signed_area(vertices) < 0:
        logger.warning(
            "Polygon file is clockwise; reversing vertex order",
            extra={'file_path': str(path), 'vertex_count': len(vertices)}
        )
        vertices = vertices[::-1]
    return Polygon.from_coordinates(vertices)


def save_polygon(polygon: Polygon, path: Path) -> None:
    """Write a polygon in the plain-text format"""
    lines = ["# x y, counterclockwise, closure implicit"]
    lines += [f"{v.x!r} {v.y!r}" for v in polygon.vertices]
    Path(path).write_text("\n".join(lines) + "\n", encoding='utf-8')
