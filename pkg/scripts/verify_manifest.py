#!/usr/bin/env python3
"""
Standalone manifest script.

Rehashes the artifacts of a finished run and compares them with the
run's manifest.json, or lists what the manifest records.
"""

import sys
import json
import argparse
from pathlib import Path

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from traceconst.checksum.manifest import MANIFEST_NAME, RunManifestGenerator  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description='Verify or list the artifacts of a traceconst run')
    parser.add_argument('output_dir', nargs='?', default='out', help='Run output directory')
    parser.add_argument('--list', action='store_true', help='List recorded artifacts instead of verifying')

    args = parser.parse_args()

    output_dir = Path(args.output_dir)
    manifest_path = output_dir / MANIFEST_NAME
    if not manifest_path.exists():
        print(f"❌ Manifest not found: {manifest_path}")
        return 1

    if args.list:
        with open(manifest_path, encoding='utf-8') as f:
            manifest = json.load(f)
        print(f"📊 {manifest['config']['subcommand']} run, package {manifest['package_version']}")
        for name, info in manifest['artifacts'].items():
            print(f"  {name}  {info['sha256'][:16]}...  {info['size']} bytes")
        return 0

    if RunManifestGenerator(output_dir).verify_manifest(manifest_path):
        print("✅ All artifacts match the manifest")
        return 0
    print("❌ Artifact verification failed")
    return 1


if __name__ == "__main__":
    sys.exit(main())
