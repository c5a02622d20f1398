import json
from pathlib import Path
from typing import Any, Dict

from .calculator import ChecksumCalculator
from ..utils.config import RunConfig
from ..utils.logging import get_logger

MANIFEST_NAME = "manifest.json"
MANIFEST_VERSION = "1.0.0"


class RunManifestGenerator:
    """Describe the artifacts of one CLI run: package version, configuration, hashes.

    The manifest carries no timestamp, so two runs with the same configuration
    produce the same manifest bytes.
    """

    def __init__(self, output_dir: Path):
        self.output_dir = Path(output_dir)
        self.calculator = ChecksumCalculator()
        self.logger = get_logger('checksum.manifest')

    def generate_manifest(self, config: RunConfig) -> Dict[str, Any]:
        from .. import __version__

        return {
            "manifest_version": MANIFEST_VERSION,
            "package_version": __version__,
            "config": config.to_dict(),
            "artifacts": self.calculator.calculate_artifact_hashes(
                self.output_dir, exclude=[MANIFEST_NAME]
            )
        }

    def write_manifest(self, config: RunConfig) -> Path:
        manifest = self.generate_manifest(config)
        manifest_path = self.output_dir / MANIFEST_NAME
        with open(manifest_path, 'w', encoding='utf-8') as f:
            json.dump(manifest, f, indent=2, sort_keys=True)
            f.write('\n')
        self.logger.info(
            "Run manifest written",
            extra={'manifest_path': str(manifest_path),
                   'artifact_count': len(manifest["artifacts"])}
        )
        return manifest_path

    def verify_manifest(self, manifest_path: Path) -> bool:
        """Check every artifact listed in a manifest against the files on disk"""
        manifest_path = Path(manifest_path)
        if not manifest_path.exists():
            self.logger.error(f"Manifest file not found: {manifest_path}")
            return False

        with open(manifest_path, 'r', encoding='utf-8') as f:
            stored = json.load(f)

        failed = 0
        for relative, info in stored.get("artifacts", {}).items():
            path = self.output_dir / relative
            if not path.exists():
                failed += 1
                self.logger.warning("Missing artifact referenced in manifest",
                                    extra={'file_path': relative})
                continue
            if not self.calculator.verify_file_hash(path, info.get("sha256", "")):
                failed += 1

        self.logger.info(
            f"Manifest verification {'passed' if failed == 0 else 'failed'}",
            extra={'manifest_path': str(manifest_path), 'failed': failed}
        )
        return failed == 0
