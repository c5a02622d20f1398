import math

from ..models.body import SMOOTH_TOL, ConvexBody


def corner_limit_factor(body: ConvexBody) -> float:
    """lim_{a->0} a / m(a).

    A corner with exterior angle phi (interior angle pi - phi) is cut at best
    by an isosceles chord of length a*cos(phi/2); smooth bodies give 1.
    """
    turns = body.junction_turns
    sharp = turns[turns > SMOOTH_TOL]
    if sharp.size == 0:
        return 1.0
    return 1.0 / math.cos(0.5 * float(sharp.max()))
