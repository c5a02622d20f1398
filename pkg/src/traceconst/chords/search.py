import math
from typing import Callable, NamedTuple

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


class GoldenResult(NamedTuple):
    lo: np.ndarray
    hi: np.ndarray
    x: np.ndarray
    fx: np.ndarray


def golden_section_search(f: Callable[[np.ndarray], np.ndarray], lo, hi, tol: float) -> GoldenResult:
    """
    Golden-section search on many brackets at once.

    `f` maps an array of abscissae to an array of values. Each bracket
    [lo_i, hi_i] is assumed to hold a single local minimum; the returned
    brackets have width <= tol and x is the better interior point.
    """
    lo = np.array(lo, dtype=float, copy=True)
    hi = np.array(hi, dtype=float, copy=True)
    lo, hi = np.minimum(lo, hi), np.maximum(lo, hi)
    h = hi - lo
    h_max = float(h.max()) if h.size else 0.0
    if h_max <= tol:
        x = 0.5 * (lo + hi)
        return GoldenResult(lo, hi, x, f(x))

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h_max) / math.log(INV_PHI)))

    c = lo + INV_PHI_SQUARE * h
    d = lo + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        left = yc < yd
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
        h = INV_PHI * h
        x = np.where(left, lo + INV_PHI_SQUARE * h, lo + INV_PHI * h)
        fx = f(x)
        c, d, yc, yd = (
            np.where(left, x, d),
            np.where(left, c, x),
            np.where(left, fx, yd),
            np.where(left, yc, fx),
        )

    left = yc < yd
    return GoldenResult(
        lo=np.where(left, lo, c),
        hi=np.where(left, d, hi),
        x=np.where(left, c, d),
        fx=np.where(left, yc, yd),
    )
