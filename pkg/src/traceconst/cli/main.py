import argparse
import dataclasses
import sys
from pathlib import Path
from typing import Any, Dict, List

from .ball import BallConstantCLI
from .cauchy import CauchyCheckCLI
from .constants import ConstantsCLI
from .random_bodies import RandomBodiesCLI
from .stadium import StadiumSweepCLI
from ..checksum.manifest import RunManifestGenerator
from ..errors import (
    ConfigError, InvalidBody, InvalidDim, InvalidParams, InvalidPolygon, ParseError,
    TriangulationFailure,
)
from ..utils.config import FORMATS, LoggingConfig, RunConfig
from ..utils.logging import LoggerSetup, get_logger, timed

COMMANDS = {
    'constants': (ConstantsCLI, 'C_med and C_mv of one convex body'),
    'stadium-sweep': (StadiumSweepCLI, 'Closed form vs optimizer over the stadium family'),
    'cauchy-check': (CauchyCheckCLI, 'Both Cauchy perimeter formulas on polygons'),
    'random-bodies': (RandomBodiesCLI, 'Lower bounds on seeded random convex bodies'),
    'ball-constant': (BallConstantCLI, 'Trace constant of the n-ball, both closed forms'),
}

# Domain input errors map to exit code 2.
INPUT_ERRORS = (ParseError, InvalidBody, InvalidPolygon, InvalidParams, InvalidDim,
                ConfigError, TriangulationFailure, OSError)

# argparse dest -> RunConfig field
OPTION_FIELDS = {
    'shape': 'shape',
    'out': 'output_dir',
    'a_grid': 'a_grid',
    's_grid': 's_grid',
    'quad': 'quadrature_points',
    'seed': 'seed',
    'format': 'format',
    'n_bodies': 'n_bodies',
    'oracle_resolution': 'oracle_resolution',
    'dim': 'dim',
    'threads': 'threads',
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--shape', help='Built-in body: disk, square, triangle, stadium:R:d, regular:k')
    common.add_argument('--input', action='append', type=Path, default=None,
                        help='Polygon file ("x y" lines or JSON); repeatable for cauchy-check')
    common.add_argument('--out', type=Path, help='Output directory (default: out)')
    common.add_argument('--a-grid', type=int, help='Arc-split grid size (default: 2048)')
    common.add_argument('--s-grid', type=int, help='Anchor grid size (default: 4096)')
    common.add_argument('--quad', type=int, help='Angular quadrature points (default: 4096)')
    common.add_argument('--seed', type=int, help='Random seed (default: 42)')
    common.add_argument('--format', choices=FORMATS, help='Table format (default: csv)')
    common.add_argument('--n-bodies', type=int, help='Random bodies to generate (default: 200)')
    common.add_argument('--oracle-resolution', type=int, help='Cut oracle resolution (default: 256)')
    common.add_argument('--dim', type=int, help='Largest dimension for ball-constant (default: 10)')
    common.add_argument('--threads', type=int, help='Worker threads (default: TRACECONST_THREADS or 1)')
    common.add_argument('--config', type=Path, help='JSON run configuration')
    common.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    common.add_argument('--log-file', type=Path, help='Log file path')
    common.add_argument('--json-logs', action='store_true', default=None,
                        help='Output logs in JSON format')

    parser = argparse.ArgumentParser(
        description='Sharp trace Poincare constants of planar convex bodies',
        prog='traceconst'
    )
    subparsers = parser.add_subparsers(dest='command', help='Available commands')
    for name, (_, help_text) in COMMANDS.items():
        subparsers.add_parser(name, parents=[common], help=help_text)
    return parser


def config_from_args(parsed: argparse.Namespace) -> RunConfig:
    """RunConfig from --config or the environment, with command-line flags on top"""
    overrides: Dict[str, Any] = {'subcommand': parsed.command}
    for option, field_name in OPTION_FIELDS.items():
        value = getattr(parsed, option)
        if value is not None:
            overrides[field_name] = value
    if parsed.input:
        overrides['input_path'] = parsed.input[0]
        overrides['inputs'] = parsed.input[1:]

    if parsed.config is not None:
        base = RunConfig.from_file(parsed.config)
    else:
        base = RunConfig.from_environment()

    logging_config = base.logging
    logging_overrides = {
        key: value for key, value in (
            ('level', parsed.log_level),
            ('log_file', parsed.log_file),
            ('json_format', parsed.json_logs),
        ) if value is not None
    }
    if logging_overrides:
        logging_config = dataclasses.replace(logging_config, **logging_overrides)
    return dataclasses.replace(base, logging=logging_config, **overrides)


def main(args: List[str] = None) -> int:
    """Main CLI entry point"""
    parser = build_parser()
    parsed_args = parser.parse_args(args)

    if not parsed_args.command:
        parser.print_help()
        return 2

    # Setup basic logging first
    LoggerSetup.setup_logging(level=parsed_args.log_level or 'INFO')
    logger = get_logger('cli.main')

    try:
        config = config_from_args(parsed_args)
        LoggerSetup.setup_logging(
            level=config.logging.level,
            log_file=config.logging.log_file,
            json_format=config.logging.json_format
        )
        config.output_dir.mkdir(parents=True, exist_ok=True)

        command_class, _ = COMMANDS[config.subcommand]
        with timed(logger, "Command finished", command=config.subcommand,
                   output_dir=str(config.output_dir)) as summary:
            exit_code = command_class(config).run()
            RunManifestGenerator(config.output_dir).write_manifest(config)
            summary["exit_code"] = exit_code
    except INPUT_ERRORS as e:
        logger.error(
            f"Input error: {e}",
            extra={'command': parsed_args.command, 'error_type': type(e).__name__}
        )
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return 2

    return exit_code


if __name__ == '__main__':
    sys.exit(main())
