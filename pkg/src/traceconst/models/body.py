import math
from typing import Tuple

import numpy as np
from pydantic import PrivateAttr, model_validator

from .base import FrozenModel
from .pieces import BoundaryPiece, Segment, piece_table
from ..errors import InvalidBody, NotConvex
from ..validation.body import CLOSURE_TOL, CONVEXITY_CODES, ConvexBodyValidator, junction_turn
from ..utils.logging import get_logger

logger = get_logger('models.body')

SMOOTH_TOL = 1e-9


class ConvexBody(FrozenModel):
    """Convex planar body bounded by a counterclockwise chain of segments and arcs.

    Arc length s runs from the start of the first piece; all evaluation methods
    reduce s modulo the perimeter.
    """
    pieces: Tuple[BoundaryPiece, ...]

    _table: dict = PrivateAttr(default=None)
    _cumulative: np.ndarray = PrivateAttr(default=None)
    _turns: np.ndarray = PrivateAttr(default=None)

    @model_validator(mode='after')
    def validate_chain(self) -> 'ConvexBody':
        validator = ConvexBodyValidator()
        if not validator.validate(self.pieces):
            error = validator.get_errors()[0]
            logger.error(
                "Rejected boundary chain",
                extra={'code': error.code, 'reason': error.message, 'piece_count': len(self.pieces)}
            )
            if error.code in CONVEXITY_CODES:
                raise NotConvex(error.message)
            raise InvalidBody(error.message)
        return self

    def model_post_init(self, __context) -> None:
        self._table = piece_table(self.pieces)
        lengths = self._table['length']
        cumulative = np.concatenate([[0.0], np.cumsum(lengths)])
        cumulative[-1] = math.fsum(lengths)
        self._cumulative = cumulative
        n = len(self.pieces)
        # turn at junction k sits at the start of piece k
        self._turns = np.array([
            junction_turn(self.pieces[k - 1].end_tangent, self.pieces[k].start_tangent)
            for k in range(n)
        ])

        logger.debug(
            "ConvexBody created",
            extra={
                'piece_count': n,
                'arc_count': int(self._table['is_arc'].sum()),
                'perimeter': self.perimeter,
                'corner_count': int((self._turns > SMOOTH_TOL).sum())
            }
        )

    @property
    def perimeter(self) -> float:
        return float(self._cumulative[-1])

    @property
    def cumulative_lengths(self) -> Tuple[float, ...]:
        return tuple(float(c) for c in self._cumulative[1:])

    @property
    def junctions(self) -> np.ndarray:
        """Arc-length positions of the piece starts"""
        return self._cumulative[:-1].copy()

    @property
    def junction_turns(self) -> np.ndarray:
        """Exterior angle at each junction (0 where the boundary is smooth)"""
        return self._turns.copy()

    @property
    def corners(self) -> np.ndarray:
        """Arc-length positions of the non-smooth junctions"""
        return self._cumulative[:-1][self._turns > SMOOTH_TOL]

    @property
    def is_polygon(self) -> bool:
        return all(isinstance(p, Segment) for p in self.pieces)

    def locate(self, s):
        """Piece index and offset inside that piece for each arc length in s"""
        s = np.mod(np.atleast_1d(np.asarray(s, dtype=float)), self.perimeter)
        idx = np.searchsorted(self._cumulative, s, side='right') - 1
        idx = np.clip(idx, 0, len(self.pieces) - 1)
        return idx, s - self._cumulative[idx]

    def points(self, s) -> np.ndarray:
        """x(s) for an array of arc lengths, shape (..., 2); a scalar s gives shape (2,)"""
        scalar = np.ndim(s) == 0
        idx, t = self.locate(s)
        tab = self._table
        seg = tab['origin'][idx] + t[..., None] * tab['direction'][idx]
        angle = tab['angle0'][idx] + tab['sign'][idx] * t / tab['radius'][idx]
        arc = tab['center'][idx] + tab['radius'][idx][..., None] * np.stack(
            [np.cos(angle), np.sin(angle)], axis=-1
        )
        out = np.where(tab['is_arc'][idx][..., None], arc, seg)
        return out[0] if scalar else out

    def tangents(self, s) -> np.ndarray:
        """x'(s) for an array of arc lengths (one-sided from the right at junctions)"""
        scalar = np.ndim(s) == 0
        idx, t = self.locate(s)
        tab = self._table
        angle = tab['angle0'][idx] + tab['sign'][idx] * t / tab['radius'][idx]
        arc = tab['sign'][idx][..., None] * np.stack([-np.sin(angle), np.cos(angle)], axis=-1)
        out = np.where(tab['is_arc'][idx][..., None], arc, tab['direction'][idx])
        return out[0] if scalar else out

    def distance_to_corner(self, s: float) -> float:
        """Arc-length distance from s to the nearest non-smooth junction (inf if none)"""
        corners = self.corners
        if corners.size == 0:
            return math.inf
        L = self.perimeter
        d = np.abs(np.mod(s - corners + 0.5 * L, L) - 0.5 * L)
        return float(d.min())

    def at_corner(self, s: float) -> bool:
        return self.distance_to_corner(s) <= CLOSURE_TOL * self.perimeter

    def transformed(self, scale: float = 1.0, rotation: float = 0.0,
                    shift: Tuple[float, float] = (0.0, 0.0)) -> 'ConvexBody':
        """Image under x -> scale * R(rotation) x + shift; arc length scales by `scale`"""
        return ConvexBody(pieces=tuple(p.transformed(scale, rotation, shift) for p in self.pieces))
