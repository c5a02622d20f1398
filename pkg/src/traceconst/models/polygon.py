import math
from typing import Tuple

from pydantic import model_validator

from .base import FrozenModel, Point2
from ..errors import InvalidPolygon
from ..validation.polygon import PolygonValidator, is_convex, signed_area
from ..utils.logging import get_logger

logger = get_logger('models.polygon')


class Polygon(FrozenModel):
    """Simple polygon, counterclockwise, closure implicit"""
    vertices: Tuple[Point2, ...]

    @model_validator(mode='after')
    def validate_vertices(self) -> 'Polygon':
        validator = PolygonValidator()
        if not validator.validate(self.coordinates):
            error = validator.get_errors()[0]
            logger.error(
                "Rejected polygon",
                extra={'code': error.code, 'reason': error.message,
                       'vertex_count': len(self.vertices)}
            )
            raise InvalidPolygon(error.message)
        return self

    @classmethod
    def from_coordinates(cls, coords) -> 'Polygon':
        return cls(vertices=tuple(Point2.of(c) for c in coords))

    @property
    def coordinates(self) -> Tuple[Tuple[float, float], ...]:
        return tuple(v.as_tuple() for v in self.vertices)

    @property
    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    @property
    def perimeter(self) -> float:
        return math.fsum(a.distance(b) for a, b in self.edges)

    @property
    def area(self) -> float:
        return signed_area(self.coordinates)

    @property
    def diameter(self) -> float:
        pts = self.vertices
        return max(a.distance(b) for a in pts for b in pts)

    @property
    def is_convex(self) -> bool:
        return is_convex(self.coordinates)

    def transformed(self, scale: float = 1.0, rotation: float = 0.0,
                    shift: Tuple[float, float] = (0.0, 0.0)) -> 'Polygon':
        c, s = math.cos(rotation), math.sin(rotation)
        return Polygon.from_coordinates([
            (scale * (c * v.x - s * v.y) + shift[0], scale * (s * v.x + c * v.y) + shift[1])
            for v in self.vertices
        ])
