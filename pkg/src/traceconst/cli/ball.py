from .output import TableWriter
from ..constants.ball import AGREEMENT_TOL, ball_constant_forms, mv_lower_bound
from ..errors import InvalidDim
from ..utils.config import RunConfig
from ..utils.logging import get_logger


class BallConstantCLI:
    HEADER = ('n', 'gamma_form', 'omega_form', 'relative_diff', 'mv_lower_bound')

    def __init__(self, config: RunConfig):
        self.config = config
        self.logger = get_logger('cli.ball')

    def run(self) -> int:
        if self.config.dim < 2:
            raise InvalidDim(f"--dim must be at least 2, got {self.config.dim}")

        rows = []
        for n in range(2, self.config.dim + 1):
            gamma_form, omega_form = ball_constant_forms(n)
            rel = abs(gamma_form - omega_form) / omega_form
            rows.append((n, gamma_form, omega_form, rel, mv_lower_bound(n)))
            print(f"n={n:3d}  {gamma_form:.17g}  {omega_form:.17g}  rel {rel:.1e}")

        TableWriter(self.config.output_dir, self.config.format).write('ball_constant', self.HEADER, rows)

        worst = max(r[3] for r in rows)
        if worst > AGREEMENT_TOL:
            self.logger.error("Ball constant closed forms disagree", extra={'max_relative': worst})
            print("❌ Closed forms disagree")
            return 1
        print("✅ Closed forms agree")
        return 0
