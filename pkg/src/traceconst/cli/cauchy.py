from typing import List, Tuple

from .output import TableWriter, plot_cauchy_gaps
from ..cauchy.perimeter import perimeter_by_crossings, perimeter_by_projections
from ..geom.io import load_polygon
from ..geom.shapes import l_shape, regular_polygon, star_polygon, unit_square
from ..models.polygon import Polygon
from ..utils.config import RunConfig
from ..utils.logging import get_logger

GAP_TOL = 1e-6


def builtin_polygons() -> List[Tuple[str, Polygon]]:
    return [
        ('square', unit_square()),
        ('hexagon', regular_polygon(6, 1.0)),
        ('l-shape', l_shape()),
        ('star', star_polygon()),
    ]


class CauchyCheckCLI:
    HEADER = ('polygon', 'convex', 'perimeter', 'by_crossings', 'by_projections',
              'convexity_gap', 'ok')

    def __init__(self, config: RunConfig):
        self.config = config
        self.logger = get_logger('cli.cauchy')

    def polygons(self) -> List[Tuple[str, Polygon]]:
        paths = list(self.config.inputs)
        if self.config.input_path is not None:
            paths.insert(0, self.config.input_path)
        if not paths:
            return builtin_polygons()
        return [(path.stem, load_polygon(path)) for path in paths]

    def check(self, poly: Polygon) -> Tuple[float, float, float, bool]:
        n = self.config.quadrature_points
        threads = self.config.threads
        perimeter = poly.perimeter
        crossings = perimeter_by_crossings(poly, n, threads)
        projections = perimeter_by_projections(poly, n, threads)
        gap = crossings - projections

        equality = abs(crossings - perimeter) <= (10.0 / n) * perimeter
        inequality = projections <= crossings + 1e-9
        classified = (gap <= GAP_TOL) == poly.is_convex
        return crossings, projections, gap, equality and inequality and classified

    def run(self) -> int:
        rows = []
        for name, poly in self.polygons():
            crossings, projections, gap, ok = self.check(poly)
            rows.append((name, poly.is_convex, poly.perimeter, crossings, projections, gap, ok))
            print(f"{'✅' if ok else '❌'} {name}: perimeter {poly.perimeter:.10g}, "
                  f"crossings {crossings:.10g}, projections {projections:.10g}, gap {gap:.3e}")
            if not ok:
                self.logger.error(
                    "Cauchy relations failed",
                    extra={'polygon': name, 'perimeter': poly.perimeter,
                           'crossings': crossings, 'projections': projections, 'gap': gap}
                )

        writer = TableWriter(self.config.output_dir, self.config.format)
        writer.write('cauchy_check', self.HEADER, rows)
        plot_cauchy_gaps([r[0] for r in rows], [r[5] for r in rows],
                         self.config.output_dir / 'cauchy_gaps.svg')
        return 0 if all(r[6] for r in rows) else 1
