import csv
import json
import math
from pathlib import Path
from typing import Any, List, Optional, Sequence

import matplotlib
matplotlib.use('Agg')
from matplotlib.figure import Figure  # noqa: E402

from ..models.report import TraceProfile  # noqa: E402
from ..utils.logging import get_logger  # noqa: E402

logger = get_logger('cli.output')

SVG_RC = {'svg.hashsalt': 'traceconst', 'svg.fonttype': 'none'}


def format_number(value: Any) -> str:
    """Full-precision text for floats, plain str for everything else"""
    if isinstance(value, float):
        return format(value, '.17g')
    return str(value)


class TableWriter:
    """Write result tables as CSV (one header row) or JSON (list of records)"""

    def __init__(self, output_dir: Path, format: str = 'csv'):
        self.output_dir = Path(output_dir)
        self.format = format
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def write(self, name: str, header: Sequence[str], rows: List[Sequence[Any]]) -> Path:
        path = self.output_dir / f"{name}.{self.format}"
        if self.format == 'csv':
            with open(path, 'w', newline='', encoding='utf-8') as f:
                writer = csv.writer(f, lineterminator='\n')
                writer.writerow(header)
                for row in rows:
                    writer.writerow([format_number(v) for v in row])
        else:
            records = [dict(zip(header, row)) for row in rows]
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(records, f, indent=2)
                f.write('\n')
        logger.info(
            f"Wrote {name} table",
            extra={'file_path': str(path), 'rows': len(rows), 'format': self.format}
        )
        return path


def _save(fig: Figure, path: Path) -> Path:
    with matplotlib.rc_context(SVG_RC):
        fig.savefig(path, format='svg', metadata={'Date': None})
    logger.info("Wrote figure", extra={'file_path': str(path)})
    return path


def plot_profile(profile: TraceProfile, path: Path, title: Optional[str] = None) -> Path:
    """Both ratio curves over a / L with the disk lower bounds"""
    fig = Figure(figsize=(6.4, 4.0))
    ax = fig.add_subplot(1, 1, 1)
    x = profile.a / profile.perimeter
    ax.plot(x, profile.med_ratio, label='a / m(a)')
    ax.plot(x, profile.mv_ratio, label='(2/L) a (L - a) / m(a)')
    ax.axhline(0.5 * math.pi, color='gray', linestyle='--', linewidth=0.8, label='pi / 2')
    ax.axhline(2.0, color='gray', linestyle=':', linewidth=0.8, label='2')
    ax.set_xlabel('a / L')
    ax.set_ylabel('ratio')
    ax.set_xscale('log')
    if title:
        ax.set_title(title)
    ax.grid(True)
    ax.legend(loc='best')
    return _save(fig, path)


def plot_stadium_sweep(ratios: Sequence[float], closed: Sequence[float],
                       optimized: Sequence[float], threshold: float, path: Path) -> Path:
    fig = Figure(figsize=(6.4, 4.0))
    ax = fig.add_subplot(1, 1, 1)
    ax.plot(ratios, closed, label='closed form')
    ax.plot(ratios, optimized, linestyle='none', marker='.', markersize=3, label='chord optimizer')
    ax.axvline(threshold, color='gray', linestyle='--', linewidth=0.8, label='d/R = 4 - pi')
    ax.set_xlabel('d / R')
    ax.set_ylabel('C_mv')
    ax.grid(True)
    ax.legend(loc='best')
    return _save(fig, path)


def plot_cauchy_gaps(names: Sequence[str], gaps: Sequence[float], path: Path) -> Path:
    fig = Figure(figsize=(6.4, 4.0))
    ax = fig.add_subplot(1, 1, 1)
    ax.bar(range(len(names)), gaps)
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=30, ha='right')
    ax.set_ylabel('perimeter - projection integral')
    ax.grid(True, axis='y')
    fig.tight_layout()
    return _save(fig, path)


def plot_random_bodies(c_med: Sequence[float], c_mv: Sequence[float], path: Path) -> Path:
    fig = Figure(figsize=(5.0, 5.0))
    ax = fig.add_subplot(1, 1, 1)
    ax.scatter(c_med, c_mv, s=6)
    ax.axvline(0.5 * math.pi, color='gray', linestyle='--', linewidth=0.8)
    ax.axhline(2.0, color='gray', linestyle='--', linewidth=0.8)
    ax.set_xlabel('C_med')
    ax.set_ylabel('C_mv')
    ax.grid(True)
    return _save(fig, path)

