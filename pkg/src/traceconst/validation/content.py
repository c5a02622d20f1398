import json
import math
import time
from pathlib import Path
from typing import List, Optional, Tuple

from .base import BaseValidator
from ..utils.logging import get_logger

Vertex = Tuple[float, float]


class PolygonFileValidator(BaseValidator):
    """Validates a polygon file: size, then JSON or whitespace "x y" syntax.

    On success the parsed vertex list is available as `vertices`.
    """

    def __init__(self, max_file_size_mb: float = 3.0):
        super().__init__()
        self.max_file_size_mb = max_file_size_mb
        self.vertices: Optional[List[Vertex]] = None
        self.logger = get_logger('validation.content')

    def validate(self, file_path: Path) -> bool:
        start_time = time.time()
        file_path = Path(file_path)
        self.vertices = None

        self.logger.info(
            "Starting polygon file validation",
            extra={'file_path': str(file_path), 'validation_type': 'content'}
        )

        valid = self._validate_file_size(file_path)
        if valid:
            valid = self._parse(file_path)

        duration = (time.time() - start_time) * 1000
        self.logger.info(
            f"Polygon file validation {'passed' if valid else 'failed'}",
            extra={
                'file_path': str(file_path),
                'validation_type': 'content',
                'duration_ms': duration,
                'vertex_count': len(self.vertices) if self.vertices else 0,
                'error_count': len(self.get_errors())
            }
        )
        return valid

    def _validate_file_size(self, file_path: Path) -> bool:
        if not file_path.exists():
            self.add_error(f"File does not exist: {file_path}", code='missing')
            return False

        size_mb = file_path.stat().st_size / (1024 * 1024)
        if size_mb > self.max_file_size_mb:
            self.add_error(
                f"File size ({size_mb:.2f}MB) exceeds {self.max_file_size_mb}MB limit",
                code='size'
            )
            return False
        return True

    def _parse(self, file_path: Path) -> bool:
        try:
            text = file_path.read_text(encoding='utf-8')
        except (OSError, UnicodeDecodeError) as e:
            self.add_error(f"Error reading file: {e}", code='read')
            return False

        body = "\n".join(
            line for line in text.splitlines() if not line.lstrip().startswith('#')
        ).strip()
        if not body:
            self.add_error("File contains no vertices", code='empty')
            return False

        if body.startswith('['):
            vertices = self._parse_json(body)
        else:
            vertices = self._parse_text(body)
        if vertices is None:
            return False

        for k, (x, y) in enumerate(vertices):
            if not (math.isfinite(x) and math.isfinite(y)):
                self.add_error(f"Vertex {k} is not finite", code='syntax')
                return False
        self.vertices = vertices
        return True

    def _parse_json(self, body: str) -> Optional[List[Vertex]]:
        try:
            data = json.loads(body)
        except json.JSONDecodeError as e:
            self.add_error(f"Invalid JSON syntax: {e}", code='syntax')
            return None
        vertices = []
        for k, pair in enumerate(data):
            if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
                self.add_error(f"Entry {k} is not an [x, y] pair", code='syntax')
                return None
            try:
                vertices.append((float(pair[0]), float(pair[1])))
            except (TypeError, ValueError):
                self.add_error(f"Entry {k} is not numeric", code='syntax')
                return None
        return vertices

    def _parse_text(self, body: str) -> Optional[List[Vertex]]:
        vertices = []
        for lineno, line in enumerate(body.splitlines(), 1):
            fields = line.replace(',', ' ').split()
            if not fields:
                continue
            if len(fields) != 2:
                self.add_error(f"Line {lineno}: expected 'x y', got {line.strip()!r}", code='syntax')
                return None
            try:
                vertices.append((float(fields[0]), float(fields[1])))
            except ValueError:
                self.add_error(f"Line {lineno}: non-numeric value in {line.strip()!r}", code='syntax')
                return None
        return vertices
