from typing import Optional, Tuple

from pydantic import model_validator

from .base import FrozenModel, Point2


class Chord(FrozenModel):
    """Boundary cut from x(s) to x(s + a)"""
    s: float
    a: float
    length: float
    endpoints: Tuple[Point2, Point2]

    @model_validator(mode='after')
    def validate_chord(self) -> 'Chord':
        if not self.a > 0:
            raise ValueError(f'Arc split must be positive, got {self.a}')
        if not 0 < self.length <= self.a * (1 + 1e-12):
            raise ValueError(f'Chord length {self.length} must lie in (0, a={self.a}]')
        return self


class MinChordResult(FrozenModel):
    a: float
    min_length: float
    argmin_s: float
    residual: Optional[float] = None
    bracket_width: float
    chord: Chord
