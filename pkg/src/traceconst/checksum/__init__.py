"""
Reproducibility manifest for CLI runs.

This package handles:
- SHA-256 hashes of output artifacts
- Run manifest generation and verification
"""

from .calculator import ChecksumCalculator
from .manifest import RunManifestGenerator, MANIFEST_NAME

__all__ = [
    "ChecksumCalculator",
    "RunManifestGenerator",
    "MANIFEST_NAME"
]
