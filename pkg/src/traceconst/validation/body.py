import math
from typing import Sequence

from .base import BaseValidator
from ..utils.logging import get_logger

CLOSURE_TOL = 1e-12
TURNING_TOL = 1e-9
CONVEXITY_CODES = ('negative_turn', 'cusp', 'inward_arc', 'total_turning')


def junction_turn(prev_tangent, next_tangent) -> float:
    """Signed exterior angle from one unit tangent to the next"""
    cross = prev_tangent[0] * next_tangent[1] - prev_tangent[1] * next_tangent[0]
    dot = prev_tangent[0] * next_tangent[0] + prev_tangent[1] * next_tangent[1]
    return math.atan2(cross, dot)


class ConvexBodyValidator(BaseValidator):
    """Checks that a piece chain closes up and turns monotonically once around"""

    def __init__(self, closure_tol: float = CLOSURE_TOL, turning_tol: float = TURNING_TOL):
        super().__init__()
        self.closure_tol = closure_tol
        self.turning_tol = turning_tol
        self.logger = get_logger('validation.body')

    def validate(self, pieces: Sequence) -> bool:
        if len(pieces) == 0:
            self.add_error("Boundary has no pieces", code='empty')
            return False

        lengths = [piece.length for piece in pieces]
        perimeter = math.fsum(lengths)
        valid = self._validate_lengths(lengths, perimeter)
        if valid:
            valid = self._validate_closure(pieces, perimeter)
        if valid:
            valid = self._validate_turning(pieces)

        self.logger.debug(
            f"Boundary validation {'passed' if valid else 'failed'}",
            extra={
                'validation_type': 'body',
                'piece_count': len(pieces),
                'perimeter': perimeter,
                'error_count': len(self.get_errors())
            }
        )
        return valid

    def _validate_lengths(self, lengths, perimeter: float) -> bool:
        if not perimeter > 0:
            self.add_error("Boundary has zero perimeter", code='length')
            return False
        for k, length in enumerate(lengths):
            if not length > 0:
                self.add_error(f"Piece {k} has length {length}", code='length')
                return False
        return True

    def _validate_closure(self, pieces, perimeter: float) -> bool:
        tol = self.closure_tol * perimeter
        n = len(pieces)
        for k in range(n):
            gap = pieces[k].end_point.distance(pieces[(k + 1) % n].start_point)
            if gap > tol:
                self.add_error(
                    f"Piece {k} ends {gap:.3e} away from the start of piece {(k + 1) % n}",
                    code='closure'
                )
                return False
        return True

    def _validate_turning(self, pieces) -> bool:
        n = len(pieces)
        total = 0.0
        for k, piece in enumerate(pieces):
            if piece.turning < 0:
                self.add_error(f"Arc {k} bulges inward (sweep {piece.turning})", code='inward_arc')
                return False
            total += piece.turning

            turn = junction_turn(piece.end_tangent, pieces[(k + 1) % n].start_tangent)
            if turn < -self.turning_tol:
                self.add_error(
                    f"Boundary turns clockwise by {-turn:.3e} rad after piece {k}",
                    code='negative_turn'
                )
                return False
            if turn > math.pi - self.turning_tol:
                self.add_error(f"Boundary has a cusp after piece {k}", code='cusp')
                return False
            total += turn

        if abs(total - 2 * math.pi) > self.turning_tol:
            self.add_error(f"Total turning is {total:.12f}, expected 2*pi", code='total_turning')
            return False
        return True
