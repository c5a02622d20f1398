import math

from pydantic import model_validator

from .base import FrozenModel, Point2


class Direction(FrozenModel):
    """Unit vector nu at angle theta, with nu_perp spanning the line orthogonal to it"""
    theta: float
    nu: Point2
    nu_perp: Point2

    @model_validator(mode='after')
    def validate_frame(self) -> 'Direction':
        if abs(self.nu.norm() - 1.0) > 1e-14 or abs(self.nu_perp.norm() - 1.0) > 1e-14:
            raise ValueError('Direction vectors must have unit length')
        if abs(self.nu.dot(self.nu_perp)) > 1e-14:
            raise ValueError('nu and nu_perp must be orthogonal')
        return self

    @classmethod
    def from_angle(cls, theta: float) -> 'Direction':
        theta = math.fmod(theta, 2 * math.pi)
        if theta < 0:
            theta += 2 * math.pi
        c, s = math.cos(theta), math.sin(theta)
        return cls(theta=theta, nu=Point2(x=c, y=s), nu_perp=Point2(x=-s, y=c))


class ProjectionResult(FrozenModel):
    direction: Direction
    essential_extent: float
    crossing_integral: float

    @property
    def hidden_measure(self) -> float:
        """Crossing integral in excess of twice the essential projection"""
        return self.crossing_integral - 2.0 * self.essential_extent
