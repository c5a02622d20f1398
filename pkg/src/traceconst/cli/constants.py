import math

from .output import TableWriter, plot_profile
from ..errors import ConfigError
from ..constants.convex import trace_constants
from ..geom.io import load_polygon
from ..geom.shapes import polygon_to_body, shape_from_name
from ..models.body import ConvexBody
from ..utils.config import RunConfig
from ..utils.logging import get_logger


def body_from_config(config: RunConfig) -> ConvexBody:
    """Polygon file from --input, otherwise the built-in --shape"""
    if config.input_path is not None:
        return polygon_to_body(load_polygon(config.input_path))
    if config.shape is not None:
        return shape_from_name(config.shape)
    raise ConfigError("Give either --input or --shape")


class ConstantsCLI:
    HEADER = ('body', 'perimeter', 'c_med', 'med_maximizer', 'med_a_star',
              'c_mv', 'mv_maximizer', 'mv_a_star', 'corner_factor',
              'med_lower_bound', 'mv_lower_bound')

    def __init__(self, config: RunConfig):
        self.config = config
        self.logger = get_logger('cli.constants')

    def run(self) -> int:
        config = self.config
        body = body_from_config(config)
        name = config.input_path.stem if config.input_path else config.shape

        result = trace_constants(body, config.a_grid, config.s_grid, config.threads)
        med, mv = result.med, result.mv

        print(f"body: {name}  (perimeter {body.perimeter:.12g})")
        print(f"C_med = {med.value:.12g}  maximizer: {med.describe_maximizer()}")
        print(f"C_mv  = {mv.value:.12g}  maximizer: {mv.describe_maximizer()}")
        print(f"lower bounds: C_med >= pi/2 = {0.5 * math.pi:.12g}, C_mv >= 2")

        writer = TableWriter(config.output_dir, config.format)
        writer.write('constants', self.HEADER, [(
            name, body.perimeter,
            med.value, med.maximizer.value, med.a_star if med.a_star is not None else '',
            mv.value, mv.maximizer.value, mv.a_star if mv.a_star is not None else '',
            result.profile.corner_factor, med.lower_bound_check, mv.lower_bound_check,
        )])
        plot_profile(result.profile, config.output_dir / 'constants_profile.svg', title=name)

        ok = med.satisfies_lower_bound and mv.satisfies_lower_bound and med.value <= mv.value + 1e-9
        if ok:
            print("✅ Lower bounds and ordering hold")
            return 0
        self.logger.error(
            "Trace constant checks failed",
            extra={'c_med': med.value, 'c_mv': mv.value}
        )
        print("❌ Lower bound or ordering violated")
        return 1
