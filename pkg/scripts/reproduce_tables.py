#!/usr/bin/env python3
"""
Regenerate every result table in one go.

Each subcommand writes into its own directory under the chosen output root,
with the default grids unless --quick is given.
"""

import sys
import argparse
from pathlib import Path

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from traceconst.cli.main import main as traceconst_main  # noqa: E402

RUNS = [
    ('constants-disk', ['constants', '--shape', 'disk']),
    ('constants-square', ['constants', '--shape', 'square']),
    ('constants-triangle', ['constants', '--shape', 'triangle']),
    ('constants-stadium', ['constants', '--shape', 'stadium:1:2']),
    ('stadium-sweep', ['stadium-sweep']),
    ('cauchy-check', ['cauchy-check']),
    ('random-bodies', ['random-bodies']),
    ('ball-constant', ['ball-constant', '--dim', '20']),
]

QUICK = ['--a-grid', '256', '--s-grid', '512', '--quad', '1024', '--n-bodies', '20']


def main():
    parser = argparse.ArgumentParser(description='Regenerate all traceconst result tables')
    parser.add_argument('--out', type=Path, default=Path('out'), help='Output root')
    parser.add_argument('--quick', action='store_true', help='Coarse grids for a fast smoke run')
    parser.add_argument('--threads', type=int, default=None, help='Worker threads per run')

    args = parser.parse_args()

    failures = []
    for name, argv in RUNS:
        argv = argv + ['--out', str(args.out / name)]
        if args.quick:
            argv += QUICK
        if args.threads is not None:
            argv += ['--threads', str(args.threads)]
        print(f"▶ {name}")
        code = traceconst_main(argv)
        if code != 0:
            failures.append((name, code))

    if failures:
        for name, code in failures:
            print(f"❌ {name} exited with {code}")
        return 1
    print(f"✅ All {len(RUNS)} runs finished under {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
