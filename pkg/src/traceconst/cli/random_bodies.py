import math
from typing import List, Optional

import numpy as np

from .output import TableWriter, plot_random_bodies
from ..constants.convex import trace_constants
from ..geom.shapes import make_stadium, random_convex_body
from ..models.stadium import StadiumParams
from ..oracle.cuts import enumerate_segment_cuts
from ..utils.config import RunConfig
from ..utils.logging import get_logger

TOL = 1e-6
STRICT_MARGIN = 1e-3
ORACLE_TOL = 1e-6
CONTROL_DS = (0.1, 0.3, 0.5)
MIN_POINTS, MAX_POINTS = 3, 12
ORACLE_SUBSAMPLE = 10


class RandomBodiesCLI:
    HEADER = ('body', 'seed', 'n_points', 'smoothing', 'perimeter', 'c_med', 'c_mv',
              'med_maximizer', 'mv_maximizer', 'oracle_med', 'oracle_mv', 'violations')

    def __init__(self, config: RunConfig):
        self.config = config
        self.logger = get_logger('cli.random_bodies')

    def bodies(self):
        """(label, seed, n_points, smoothing, body): random hulls, then stadium controls"""
        rng = np.random.default_rng(self.config.seed)
        for k in range(self.config.n_bodies):
            seed = int(rng.integers(0, 2 ** 31))
            n_points = int(rng.integers(MIN_POINTS, MAX_POINTS + 1))
            # even bodies stay polygons, odd ones get rounded corners
            smoothing = 0.0 if k % 2 == 0 else float(rng.uniform(0.1, 1.0))
            yield f"random-{k}", seed, n_points, smoothing, random_convex_body(seed, n_points, smoothing)
        for d in CONTROL_DS:
            yield f"stadium:1:{d}", None, None, None, make_stadium(StadiumParams(R=1.0, d=d))

    def check(self, smoothing: Optional[float], c_med: float, c_mv: float,
              oracle: Optional[tuple]) -> List[str]:
        violations = []
        if c_med < 0.5 * math.pi - TOL:
            violations.append('c_med below pi/2')
        if c_mv < 2.0 - TOL:
            violations.append('c_mv below 2')
        if c_med > c_mv + 1e-9:
            violations.append('c_med above c_mv')
        if smoothing == 0.0 and c_med <= 0.5 * math.pi + STRICT_MARGIN:
            violations.append('polygon c_med not strictly above pi/2')
        if smoothing is None:
            if abs(c_mv - 2.0) > TOL:
                violations.append('stadium control c_mv differs from 2')
            if c_med <= 0.5 * math.pi + TOL:
                violations.append('stadium control c_med not above pi/2')
        if oracle is not None:
            if oracle[0] > c_med + ORACLE_TOL or oracle[1] > c_mv + ORACLE_TOL:
                violations.append('oracle exceeds optimizer')
        return violations

    def run(self) -> int:
        config = self.config
        rows, c_meds, c_mvs = [], [], []
        total_violations = 0
        stride = max(1, config.n_bodies // ORACLE_SUBSAMPLE)

        for k, (label, seed, n_points, smoothing, body) in enumerate(self.bodies()):
            result = trace_constants(body, config.a_grid, config.s_grid, config.threads)
            c_med, c_mv = result.med.value, result.mv.value

            oracle = None
            if k % stride == 0 or smoothing is None:
                report = enumerate_segment_cuts(body, config.oracle_resolution, config.threads)
                oracle = (report.best_med, report.best_mv)

            violations = self.check(smoothing, c_med, c_mv, oracle)
            total_violations += len(violations)
            for violation in violations:
                self.logger.error(violation, extra={'body': label, 'c_med': c_med, 'c_mv': c_mv})
                print(f"❌ {label}: {violation}")

            rows.append((
                label, '' if seed is None else seed, '' if n_points is None else n_points,
                '' if smoothing is None else smoothing, body.perimeter, c_med, c_mv,
                result.med.maximizer.value, result.mv.maximizer.value,
                '' if oracle is None else oracle[0], '' if oracle is None else oracle[1],
                len(violations),
            ))
            c_meds.append(c_med)
            c_mvs.append(c_mv)

        writer = TableWriter(config.output_dir, config.format)
        writer.write('random_bodies', self.HEADER, rows)
        plot_random_bodies(c_meds, c_mvs, config.output_dir / 'random_bodies.svg')

        print(f"{len(rows)} bodies, min C_med = {min(c_meds):.10g}, min C_mv = {min(c_mvs):.10g}, "
              f"{total_violations} violations")
        self.logger.info(
            "Random body suite finished",
            extra={'bodies': len(rows), 'violations': total_violations,
                   'min_c_med': min(c_meds), 'min_c_mv': min(c_mvs)}
        )
        return 0 if total_violations == 0 else 1
