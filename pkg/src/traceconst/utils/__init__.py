"""
Utility modules for the trace-constant toolkit.

This package provides:
- Logging configuration and utilities
- Run configuration management
- An order-preserving thread pool map
"""

from .logging import LoggerSetup, get_logger, JSONFormatter
from .config import RunConfig, LoggingConfig, threads_from_environment
from .parallel import ordered_map

__all__ = [
    "LoggerSetup",
    "get_logger",
    "JSONFormatter",
    "RunConfig",
    "LoggingConfig",
    "threads_from_environment",
    "ordered_map"
]
