import math

from pydantic import model_validator

from .base import FrozenModel
from ..errors import InvalidParams


class StadiumParams(FrozenModel):
    """Convex hull of two disks of radius R whose centers are d apart"""
    R: float
    d: float

    @model_validator(mode='after')
    def validate_params(self) -> 'StadiumParams':
        if not (math.isfinite(self.R) and self.R > 0):
            raise InvalidParams(f"Stadium radius must be positive, got R={self.R}")
        if not (math.isfinite(self.d) and self.d >= 0):
            raise InvalidParams(f"Stadium center distance must be non-negative, got d={self.d}")
        return self

    @property
    def semiperimeter(self) -> float:
        return self.d + math.pi * self.R

    @property
    def perimeter(self) -> float:
        return 2.0 * self.semiperimeter

    @property
    def threshold(self) -> float:
        """Center distance below which the stadium has the disk's mean-value constant"""
        return (4.0 - math.pi) * self.R
