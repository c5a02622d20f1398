import json
import logging
import sys
import time
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterator, Optional

import numpy as np

from ..errors import ConfigError

ROOT_LOGGER = 'traceconst'
LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')
TEXT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Attributes every LogRecord carries; anything else came in through extra=
_RESERVED = set(vars(logging.LogRecord('', 0, '', 0, '', None, None))) | {'message', 'asctime'}


def _json_default(value: Any) -> Any:
    """numpy scalars and arrays as plain JSON, paths and the rest as text"""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return str(value)


def parse_level(level: str) -> int:
    name = str(level).upper()
    if name not in LEVELS:
        raise ConfigError(f"Log level must be one of {LEVELS}, got {level!r}")
    return getattr(logging, name)


class JSONFormatter(logging.Formatter):
    """One JSON object per record; every extra= field becomes a key"""

    def format(self, record):
        log_entry = {
            'timestamp': datetime.fromtimestamp(record.created, timezone.utc)
            .isoformat(timespec='milliseconds').replace('+00:00', 'Z'),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno
        }
        log_entry.update(
            (key, value) for key, value in record.__dict__.items()
            if key not in _RESERVED and not key.startswith('_')
        )
        if record.exc_info:
            log_entry['exception'] = self.formatException(record.exc_info)
        return json.dumps(log_entry, default=_json_default)


class LoggerSetup:
    @staticmethod
    def setup_logging(
        level: str = "INFO",
        log_file: Optional[Path] = None,
        json_format: bool = False
    ) -> logging.Logger:
        """Route the package logger to stderr, plus a JSON file at DEBUG if log_file is given.

        stdout is left to the result tables the commands print.
        """
        numeric_level = parse_level(level)
        logger = logging.getLogger(ROOT_LOGGER)
        logger.setLevel(min(numeric_level, logging.DEBUG) if log_file else numeric_level)

        for handler in logger.handlers[:]:
            logger.removeHandler(handler)
            handler.close()

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(numeric_level)
        console_handler.setFormatter(JSONFormatter() if json_format else logging.Formatter(TEXT_FORMAT))
        logger.addHandler(console_handler)

        if log_file:
            file_handler = logging.FileHandler(log_file, encoding='utf-8')
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(JSONFormatter())
            logger.addHandler(file_handler)

        return logger


@contextmanager
def timed(logger: logging.Logger, message: str, level: int = logging.INFO,
          **fields: Any) -> Iterator[dict]:
    """Log `message` with duration_ms once the block finishes.

    The yielded dict is merged into the record, so the block can add results.
    """
    extra = dict(fields)
    start_time = time.time()
    yield extra
    extra['duration_ms'] = (time.time() - start_time) * 1000
    logger.log(level, message, extra=extra)


def get_logger(name: str) -> logging.Logger:
    """Child of the package logger, e.g. get_logger('constants.convex')"""
    return logging.getLogger(f'{ROOT_LOGGER}.{name}')
