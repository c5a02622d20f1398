import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from ..utils.logging import get_logger

logger = get_logger('models.base')


class FrozenModel(BaseModel):
    """Base class for all immutable domain models"""
    model_config = ConfigDict(frozen=True, extra="forbid", validate_default=True)


class Point2(FrozenModel):
    x: float
    y: float

    @field_validator('x', 'y')
    @classmethod
    def validate_finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError(f'Coordinate must be finite, got {v}')
        return v

    @classmethod
    def of(cls, xy) -> 'Point2':
        return cls(x=float(xy[0]), y=float(xy[1]))

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)

    def distance(self, other: 'Point2') -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dot(self, other: 'Point2') -> float:
        return self.x * other.x + self.y * other.y
