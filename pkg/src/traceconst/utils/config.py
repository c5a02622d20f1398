from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Dict, Any
import os
import json

from .logging import get_logger, parse_level
from ..errors import ConfigError

logger = get_logger('utils.config')

GRID_MIN = 64
GRID_MAX = 10 ** 7
SUBCOMMANDS = ('constants', 'stadium-sweep', 'cauchy-check', 'random-bodies', 'ball-constant')
FORMATS = ('csv', 'json')


def threads_from_environment(default: int = 1) -> int:
    """Worker-thread cap from TRACECONST_THREADS"""
    raw = os.getenv('TRACECONST_THREADS')
    if not raw:
        return default
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigError(f"TRACECONST_THREADS must be an integer, got {raw!r}")
    if threads < 1:
        raise ConfigError(f"TRACECONST_THREADS must be at least 1, got {threads}")
    return threads


@dataclass
class LoggingConfig:
    level: str = "INFO"
    json_format: bool = False
    log_file: Optional[Path] = None

    def __post_init__(self):
        parse_level(self.level)
        self.level = self.level.upper()
        logger.debug(
            "LoggingConfig initialized",
            extra={
                'level': self.level,
                'json_format': self.json_format,
                'log_file': str(self.log_file) if self.log_file else None
            }
        )


@dataclass
class RunConfig:
    subcommand: str = 'constants'
    input_path: Optional[Path] = None
    inputs: List[Path] = field(default_factory=list)
    shape: Optional[str] = None
    output_dir: Path = Path('out')
    a_grid: int = 2048
    s_grid: int = 4096
    quadrature_points: int = 4096
    seed: int = 42
    format: str = 'csv'
    n_bodies: int = 200
    oracle_resolution: int = 256
    dim: int = 10
    threads: int = 1
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    def __post_init__(self):
        if isinstance(self.output_dir, str):
            self.output_dir = Path(self.output_dir)
        if isinstance(self.input_path, str):
            self.input_path = Path(self.input_path)
        self.inputs = [Path(p) for p in self.inputs]

        if self.subcommand not in SUBCOMMANDS:
            raise ConfigError(f"Unknown subcommand {self.subcommand!r}; expected one of {SUBCOMMANDS}")
        for name in ('a_grid', 's_grid'):
            value = getattr(self, name)
            if not GRID_MIN <= value <= GRID_MAX:
                raise ConfigError(f"{name} must lie in [{GRID_MIN}, {GRID_MAX}], got {value}")
        if not 16 <= self.quadrature_points <= GRID_MAX:
            raise ConfigError(
                f"quadrature_points must lie in [16, {GRID_MAX}], got {self.quadrature_points}"
            )
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.n_bodies < 1:
            raise ConfigError(f"n_bodies must be positive, got {self.n_bodies}")
        if self.threads < 1:
            raise ConfigError(f"threads must be positive, got {self.threads}")

        logger.info(
            "RunConfig initialized",
            extra={
                'subcommand': self.subcommand,
                'output_dir': str(self.output_dir),
                'a_grid': self.a_grid,
                's_grid': self.s_grid,
                'quadrature_points': self.quadrature_points,
                'seed': self.seed,
                'threads': self.threads
            }
        )

    @classmethod
    def from_file(cls, config_file: Path) -> 'RunConfig':
        """Load configuration from JSON file"""
        logger.info(f"Loading configuration from file: {config_file}")

        try:
            with open(config_file, 'r') as f:
                data = json.load(f)
        except FileNotFoundError:
            logger.error(f"Configuration file not found: {config_file}")
            raise
        except json.JSONDecodeError as e:
            logger.error(
                f"Invalid JSON in configuration file: {e}",
                extra={'config_file': str(config_file), 'error': str(e)}
            )
            raise ConfigError(f"Invalid JSON in {config_file}: {e}") from e

        logging_data = data.pop('logging', {})
        try:
            config = cls(logging=LoggingConfig(**logging_data), **data)
        except TypeError as e:
            raise ConfigError(f"Unknown configuration key in {config_file}: {e}") from e

        logger.info(
            "Configuration loaded from file",
            extra={'config_file': str(config_file)}
        )
        return config

    @classmethod
    def from_environment(cls, **overrides: Any) -> 'RunConfig':
        """Load configuration from environment variables, then apply overrides"""
        logger.info("Loading configuration from environment variables")

        logging_config = LoggingConfig(
            level=os.getenv('TRACECONST_LOG_LEVEL', 'INFO'),
            json_format=os.getenv('TRACECONST_JSON_LOGS', 'false').lower() == 'true',
            log_file=Path(log_file) if (log_file := os.getenv('TRACECONST_LOG_FILE')) else None
        )
        overrides.setdefault('threads', threads_from_environment())
        overrides.setdefault('logging', logging_config)
        return cls(**overrides)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return {
            'subcommand': self.subcommand,
            'input_path': str(self.input_path) if self.input_path else None,
            'inputs': [str(p) for p in self.inputs],
            'shape': self.shape,
            'output_dir': str(self.output_dir),
            'a_grid': self.a_grid,
            's_grid': self.s_grid,
            'quadrature_points': self.quadrature_points,
            'seed': self.seed,
            'format': self.format,
            'n_bodies': self.n_bodies,
            'oracle_resolution': self.oracle_resolution,
            'dim': self.dim,
            'threads': self.threads,
            'logging': {
                'level': self.logging.level,
                'json_format': self.logging.json_format,
                'log_file': str(self.logging.log_file) if self.logging.log_file else None
            }
        }

    def save_to_file(self, config_file: Path):
        """Save configuration to JSON file"""
        logger.info(f"Saving configuration to file: {config_file}")
        with open(config_file, 'w') as f:
            json.dump(self.to_dict(), f, indent=2)
