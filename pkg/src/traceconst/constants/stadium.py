import math

from ..errors import OutOfRange
from ..models.stadium import StadiumParams


def stadium_c_mv_closed_form(params: StadiumParams) -> float:
    """2 up to d = (4 - pi) R, then (d + pi R) / (2R)"""
    if params.d <= params.threshold:
        return 2.0
    return (params.d + math.pi * params.R) / (2.0 * params.R)


def stadium_min_chord_closed_form(params: StadiumParams, a: float) -> float:
    """min_s l_a(s): 2R once a >= pi R, else the circular chord 2R sin(a / 2R)"""
    p = params.semiperimeter
    if not 0 < a <= p * (1 + 1e-12):
        raise OutOfRange(f"Arc split a={a} outside (0, p] with p={p}")
    R = params.R
    if a >= math.pi * R:
        return 2.0 * R
    return 2.0 * R * math.sin(a / (2.0 * R))
