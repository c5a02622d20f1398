import math
from typing import Annotated, Literal, Tuple, Union

import numpy as np
from pydantic import Field, field_validator

from .base import FrozenModel, Point2


def _rigid(xy: Tuple[float, float], scale: float, rotation: float,
           shift: Tuple[float, float]) -> Point2:
    c, s = math.cos(rotation), math.sin(rotation)
    x, y = xy
    return Point2(x=scale * (c * x - s * y) + shift[0], y=scale * (s * x + c * y) + shift[1])


class Segment(FrozenModel):
    kind: Literal['segment'] = 'segment'
    start: Point2
    end: Point2

    @property
    def length(self) -> float:
        return self.start.distance(self.end)

    @property
    def direction(self) -> Tuple[float, float]:
        length = self.length
        return ((self.end.x - self.start.x) / length, (self.end.y - self.start.y) / length)

    @property
    def start_point(self) -> Point2:
        return self.start

    @property
    def end_point(self) -> Point2:
        return self.end

    @property
    def start_tangent(self) -> Tuple[float, float]:
        return self.direction

    @property
    def end_tangent(self) -> Tuple[float, float]:
        return self.direction

    @property
    def turning(self) -> float:
        return 0.0

    def transformed(self, scale: float = 1.0, rotation: float = 0.0,
                    shift: Tuple[float, float] = (0.0, 0.0)) -> 'Segment':
        return Segment(
            start=_rigid(self.start.as_tuple(), scale, rotation, shift),
            end=_rigid(self.end.as_tuple(), scale, rotation, shift),
        )


class Arc(FrozenModel):
    """Circular arc; a positive sweep runs counterclockwise"""
    kind: Literal['arc'] = 'arc'
    center: Point2
    radius: float
    start_angle: float
    sweep: float

    @field_validator('radius')
    @classmethod
    def validate_radius(cls, v: float) -> float:
        if not (math.isfinite(v) and v > 0):
            raise ValueError(f'Arc radius must be positive, got {v}')
        return v

    @field_validator('sweep')
    @classmethod
    def validate_sweep(cls, v: float) -> float:
        if not math.isfinite(v) or v == 0:
            raise ValueError(f'Arc sweep must be finite and nonzero, got {v}')
        return v

    @property
    def length(self) -> float:
        return self.radius * abs(self.sweep)

    def _point(self, angle: float) -> Point2:
        return Point2(
            x=self.center.x + self.radius * math.cos(angle),
            y=self.center.y + self.radius * math.sin(angle),
        )

    def _tangent(self, angle: float) -> Tuple[float, float]:
        sign = 1.0 if self.sweep > 0 else -1.0
        return (-sign * math.sin(angle), sign * math.cos(angle))

    @property
    def end_angle(self) -> float:
        return self.start_angle + self.sweep

    @property
    def start_point(self) -> Point2:
        return self._point(self.start_angle)

    @property
    def end_point(self) -> Point2:
        return self._point(self.end_angle)

    @property
    def start_tangent(self) -> Tuple[float, float]:
        return self._tangent(self.start_angle)

    @property
    def end_tangent(self) -> Tuple[float, float]:
        return self._tangent(self.end_angle)

    @property
    def turning(self) -> float:
        return self.sweep

    def transformed(self, scale: float = 1.0, rotation: float = 0.0,
                    shift: Tuple[float, float] = (0.0, 0.0)) -> 'Arc':
        return Arc(
            center=_rigid(self.center.as_tuple(), scale, rotation, shift),
            radius=self.radius * scale,
            start_angle=self.start_angle + rotation,
            sweep=self.sweep,
        )


BoundaryPiece = Annotated[Union[Segment, Arc], Field(discriminator='kind')]


def piece_table(pieces) -> dict:
    """Flat numpy arrays describing a piece chain, for vectorised evaluation"""
    n = len(pieces)
    table = {
        'is_arc': np.zeros(n, dtype=bool),
        'origin': np.zeros((n, 2)),
        'direction': np.zeros((n, 2)),
        'center': np.zeros((n, 2)),
        'radius': np.ones(n),
        'angle0': np.zeros(n),
        'sign': np.ones(n),
        'length': np.zeros(n),
    }
    for k, piece in enumerate(pieces):
        table['length'][k] = piece.length
        if isinstance(piece, Arc):
            table['is_arc'][k] = True
            table['center'][k] = piece.center.as_tuple()
            table['radius'][k] = piece.radius
            table['angle0'][k] = piece.start_angle
            table['sign'][k] = 1.0 if piece.sweep > 0 else -1.0
        else:
            table['origin'][k] = piece.start.as_tuple()
            table['direction'][k] = piece.direction
    return table
