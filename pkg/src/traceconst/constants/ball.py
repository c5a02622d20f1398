import math
from typing import Tuple

from scipy.special import gammaln

from ..errors import InvalidDim
from ..utils.logging import get_logger

logger = get_logger('constants.ball')

AGREEMENT_TOL = 1e-12


def _check_dim(n: int) -> None:
    if int(n) != n or n < 2:
        raise InvalidDim(f"Dimension must be an integer >= 2, got {n}")


def volume_ratio(n: int) -> float:
    """omega_n / omega_{n-1}, from omega_n = omega_{n-2} * 2 pi / n.

    Working with the ratio r_n = 2 pi / (n r_{n-1}), r_1 = 2, keeps large n
    free of underflow.
    """
    ratio = 2.0
    for k in range(2, n + 1):
        ratio = 2 * math.pi / (k * ratio)
    return ratio


def ball_constant_forms(n: int) -> Tuple[float, float]:
    """(sqrt(pi) (n/2) Gamma((n+1)/2) / Gamma((n+2)/2), n omega_n / (2 omega_{n-1}))"""
    _check_dim(n)
    n = int(n)
    gamma_form = math.exp(
        0.5 * math.log(math.pi) + math.log(0.5 * n)
        + float(gammaln(0.5 * (n + 1))) - float(gammaln(0.5 * (n + 2)))
    )
    omega_form = 0.5 * n * volume_ratio(n)
    return gamma_form, omega_form


def ball_constant(n: int) -> float:
    """Trace constant of the n-ball: the lower bound for C_med in every dimension,
    and for C_mv when n >= 3."""
    gamma_form, omega_form = ball_constant_forms(n)
    rel = abs(gamma_form - omega_form) / omega_form
    if rel > AGREEMENT_TOL:
        logger.error(
            "Closed forms of the ball constant disagree",
            extra={'dim': n, 'gamma_form': gamma_form, 'omega_form': omega_form, 'relative': rel}
        )
        raise ArithmeticError(f"Ball constant closed forms disagree for n={n}: rel={rel:.3e}")
    return gamma_form


def mv_lower_bound(n: int) -> float:
    """Sharp lower bound for C_mv: 2 in the plane, the ball constant above"""
    _check_dim(n)
    return 2.0 if n == 2 else ball_constant(n)


def unit_ball_volume(n: int) -> float:
    """omega_n by omega_n = omega_{n-2} * 2 pi / n from omega_0 = 1, omega_1 = 2"""
    if int(n) != n or n < 0:
        raise InvalidDim(f"Dimension must be a non-negative integer, got {n}")
    volumes = [1.0, 2.0]
    for k in range(2, int(n) + 1):
        volumes.append(volumes[k - 2] * 2 * math.pi / k)
    return volumes[int(n)]
