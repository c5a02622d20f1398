"""
Command-line interface for the trace-constant experiments.
"""

from .main import main, build_parser, config_from_args

__all__ = [
    "main",
    "build_parser",
    "config_from_args"
]
