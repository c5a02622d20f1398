import json
import math

import pytest

from traceconst.models.base import Point2
from traceconst.models.pieces import Arc, Segment
from traceconst.validation.body import ConvexBodyValidator, junction_turn
from traceconst.validation.content import PolygonFileValidator
from traceconst.validation.polygon import (
    PolygonValidator, is_convex, segments_intersect, signed_area,
)
from traceconst.utils.logging import LoggerSetup

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


class TestPolygonFileValidator:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    def test_validate_text_file(self, square_file):
        """Comments are skipped and vertices parsed in order"""
        validator = PolygonFileValidator()

        assert validator.validate(square_file) is True
        assert len(validator.get_errors()) == 0
        assert validator.vertices == [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]

    def test_validate_json_file(self, temp_dir):
        """Test validation of a JSON vertex list"""
        validator = PolygonFileValidator()

        valid_file = temp_dir / "valid.json"
        with open(valid_file, 'w') as f:
            json.dump(SQUARE, f)

        assert validator.validate(valid_file) is True
        assert len(validator.vertices) == 4

    def test_comma_separated(self, temp_dir):
        """Test comma-separated vertex lines"""
        path = temp_dir / "commas.txt"
        path.write_text("0,0\n1,0\n1,1\n")
        validator = PolygonFileValidator()
        assert validator.validate(path) is True
        assert validator.vertices[2] == (1.0, 1.0)

    def test_validate_file_too_large(self, temp_dir):
        """Test validation fails for files that are too large"""
        validator = PolygonFileValidator(max_file_size_mb=0.001)

        large_file = temp_dir / "large.txt"
        large_file.write_text("0.123456789 0.987654321\n" * 1000)

        assert validator.validate(large_file) is False
        errors = validator.get_errors()
        assert len(errors) > 0
        assert "exceeds" in errors[0].message.lower()
        assert validator.error_codes() == ['size']

    def test_validate_invalid_json(self, temp_dir):
        """Test validation fails for invalid JSON"""
        validator = PolygonFileValidator()

        invalid_file = temp_dir / "invalid.json"
        with open(invalid_file, 'w') as f:
            f.write('[[0, 0], [1, 0], [1 1]]')

        assert validator.validate(invalid_file) is False
        errors = validator.get_errors()
        assert len(errors) > 0
        assert "json" in errors[0].message.lower()

    def test_json_entry_not_a_pair(self, temp_dir):
        """Test validation fails for JSON entries that are not pairs"""
        path = temp_dir / "triple.json"
        path.write_text(json.dumps([[0, 0], [1, 0, 2], [1, 1]]))
        validator = PolygonFileValidator()
        assert validator.validate(path) is False
        assert "pair" in validator.get_errors()[0].message

    def test_validate_missing_file(self, temp_dir):
        """Test validation fails for missing file"""
        validator = PolygonFileValidator()

        missing_file = temp_dir / "missing.txt"

        assert validator.validate(missing_file) is False
        assert validator.error_codes() == ['missing']

    def test_empty_file(self, temp_dir):
        """Test validation fails for files without vertices"""
        path = temp_dir / "empty.txt"
        path.write_text("# only a comment\n\n")
        validator = PolygonFileValidator()
        assert validator.validate(path) is False
        assert validator.error_codes() == ['empty']

    @pytest.mark.parametrize("content", ["0 0\n1\n1 1\n", "0 0\n1 x\n1 1\n", "0 0\nnan 1\n1 1\n"])
    def test_syntax_errors(self, temp_dir, content):
        """Test validation fails for malformed or non-finite lines"""
        path = temp_dir / "bad.txt"
        path.write_text(content)
        validator = PolygonFileValidator()
        assert validator.validate(path) is False
        assert validator.error_codes() == ['syntax']
        assert validator.vertices is None


class TestPolygonValidator:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    def test_square(self):
        """Test the unit square passes with convexity required"""
        validator = PolygonValidator(require_convex=True)
        assert validator.validate(SQUARE) is True
        assert not validator.has_errors()

    def test_count(self):
        """Test fewer than three vertices is reported"""
        validator = PolygonValidator()
        assert validator.validate([(0, 0), (1, 0)]) is False
        assert validator.error_codes() == ['count']

    def test_orientation(self):
        """Test clockwise order is reported"""
        validator = PolygonValidator()
        assert validator.validate(SQUARE[::-1]) is False
        assert validator.error_codes() == ['orientation']

    def test_self_intersection(self):
        """Test crossing edges are reported"""
        validator = PolygonValidator()
        assert validator.validate([(0, 0), (3, 0), (0, 1), (1, 2)]) is False
        assert validator.error_codes() == ['not_simple']

    def test_repeated_vertex(self):
        """Test repeated vertices are reported"""
        validator = PolygonValidator()
        assert validator.validate([(0, 0), (1, 0), (1, 0), (1, 1), (0, 1)]) is False
        assert validator.error_codes() == ['not_simple']

    def test_fold_back(self):
        """Test an edge folding back on itself is reported"""
        validator = PolygonValidator()
        assert validator.validate([(0, 0), (2, 0), (1, 0), (1, 1)]) is False
        assert validator.error_codes() == ['not_simple']

    def test_require_convex(self):
        """Test convexity is only checked when required"""
        l_shape = [(0, 0), (1, 0), (1, 0.5), (0.5, 0.5), (0.5, 1), (0, 1)]
        assert PolygonValidator().validate(l_shape) is True
        validator = PolygonValidator(require_convex=True)
        assert validator.validate(l_shape) is False
        assert validator.error_codes() == ['not_convex']

    def test_helpers(self):
        """Test signed area, convexity and segment intersection helpers"""
        assert signed_area(SQUARE) == pytest.approx(1.0)
        assert signed_area(SQUARE[::-1]) == pytest.approx(-1.0)
        assert is_convex(SQUARE)
        assert segments_intersect((0, 0), (1, 1), (0, 1), (1, 0))
        assert not segments_intersect((0, 0), (1, 0), (0, 1), (1, 1))


class TestConvexBodyValidator:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    @staticmethod
    def chain(coords):
        n = len(coords)
        return [Segment(start=Point2.of(coords[k]), end=Point2.of(coords[(k + 1) % n]))
                for k in range(n)]

    def test_square(self):
        """Test a closed square chain passes"""
        validator = ConvexBodyValidator()
        assert validator.validate(self.chain(SQUARE)) is True

    def test_empty(self):
        """Test an empty chain is reported"""
        validator = ConvexBodyValidator()
        assert validator.validate([]) is False
        assert validator.error_codes() == ['empty']

    def test_zero_length_piece(self):
        """Test zero-length pieces are reported"""
        validator = ConvexBodyValidator()
        assert validator.validate(self.chain([(0, 0), (1, 0), (1, 0), (0, 1)])) is False
        assert validator.error_codes() == ['length']

    def test_closure(self):
        """Test an open chain is reported"""
        validator = ConvexBodyValidator()
        assert validator.validate(self.chain(SQUARE)[:3]) is False
        assert validator.error_codes() == ['closure']

    def test_negative_turn(self):
        """Test a clockwise chain is reported"""
        validator = ConvexBodyValidator()
        assert validator.validate(self.chain(SQUARE[::-1])) is False
        assert validator.error_codes() == ['negative_turn']

    def test_cusp(self):
        """Test a full reversal between pieces is reported"""
        validator = ConvexBodyValidator()
        assert validator.validate(self.chain([(0, 0), (1, 0)])) is False
        assert validator.error_codes() == ['cusp']

    def test_arc_chain(self):
        """Test two half circles form a valid chain"""
        half = [
            Arc(center=Point2(x=0, y=0), radius=1.0, start_angle=0.0, sweep=math.pi),
            Arc(center=Point2(x=0, y=0), radius=1.0, start_angle=math.pi, sweep=math.pi),
        ]
        assert ConvexBodyValidator().validate(half) is True

    def test_junction_turn(self):
        """Test signed turning angles at junctions"""
        assert junction_turn((1.0, 0.0), (0.0, 1.0)) == pytest.approx(math.pi / 2)
        assert junction_turn((1.0, 0.0), (0.0, -1.0)) == pytest.approx(-math.pi / 2)
