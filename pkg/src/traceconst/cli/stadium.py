import math

import numpy as np

from .output import TableWriter, plot_stadium_sweep
from ..constants.convex import c_mv_convex
from ..constants.stadium import stadium_c_mv_closed_form
from ..geom.shapes import make_stadium
from ..models.stadium import StadiumParams
from ..utils.config import RunConfig
from ..utils.logging import get_logger

SWEEP_SAMPLES = 129
SWEEP_MAX = 2.0
AGREEMENT_TOL = 1e-6


def locate_kink(ratios: np.ndarray, values: np.ndarray) -> float:
    """Sample with the largest second difference"""
    second = values[2:] - 2 * values[1:-1] + values[:-2]
    return float(ratios[1 + int(np.argmax(second))])


class StadiumSweepCLI:
    HEADER = ('d_over_R', 'closed_form', 'optimizer', 'abs_diff')

    def __init__(self, config: RunConfig):
        self.config = config
        self.logger = get_logger('cli.stadium')

    def run(self) -> int:
        config = self.config
        ratios = np.linspace(0.0, SWEEP_MAX, SWEEP_SAMPLES)
        closed, optimized, rows = [], [], []
        for ratio in ratios:
            params = StadiumParams(R=1.0, d=float(ratio))
            exact = stadium_c_mv_closed_form(params)
            value = c_mv_convex(make_stadium(params), config.a_grid, config.s_grid, config.threads).value
            closed.append(exact)
            optimized.append(value)
            rows.append((float(ratio), exact, value, abs(value - exact)))

        worst = max(row[3] for row in rows)
        threshold = 4.0 - math.pi
        kink = locate_kink(ratios, np.array(optimized))
        step = SWEEP_MAX / (SWEEP_SAMPLES - 1)

        writer = TableWriter(config.output_dir, config.format)
        writer.write('stadium_sweep', self.HEADER, rows)
        plot_stadium_sweep(ratios, closed, optimized, threshold, config.output_dir / 'stadium_sweep.svg')

        print(f"max |optimizer - closed form| = {worst:.3e}")
        print(f"kink at d/R = {kink:.6g} (threshold 4 - pi = {threshold:.6g})")
        self.logger.info(
            "Stadium sweep finished",
            extra={'samples': SWEEP_SAMPLES, 'max_diff': worst, 'kink': kink}
        )

        ok = worst < AGREEMENT_TOL and abs(kink - threshold) <= step
        print("✅ Sweep matches the closed form" if ok else "❌ Sweep disagrees with the closed form")
        return 0 if ok else 1
