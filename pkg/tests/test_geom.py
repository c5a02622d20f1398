import json
import math

import numpy as np
import pytest

from traceconst.errors import (
    AtVertex, DegenerateHull, InvalidParams, InvalidPolygon, NotConvex, ParseError,
)
from traceconst.geom.evaluate import boundary_point, boundary_tangent
from traceconst.geom.io import load_polygon, save_polygon
from traceconst.geom.shapes import (
    dent_polygon, make_disk, make_regular_polygon, make_stadium, polygon_to_body,
    random_convex_body, random_simple_polygon, shape_from_name,
)
from traceconst.models.stadium import StadiumParams
from traceconst.utils.logging import LoggerSetup


def close(p, x, y, tol=1e-12):
    return math.isclose(p.x, x, abs_tol=tol) and math.isclose(p.y, y, abs_tol=tol)


class TestBoundaryPoint:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    def test_disk_start(self, unit_disk):
        """Test the disk boundary starts at (1, 0)"""
        assert close(boundary_point(unit_disk, 0.0), 1.0, 0.0)

    def test_disk_half_perimeter(self, unit_disk):
        """Test half the disk perimeter reaches (-1, 0)"""
        assert close(boundary_point(unit_disk, math.pi), -1.0, 0.0)

    def test_square_walk(self, square_body):
        """Test arc length walks the square counter-clockwise"""
        assert close(boundary_point(square_body, 1.5), 1.0, 0.5)

    def test_reduced_modulo_perimeter(self, square_body):
        """Test arc length is taken modulo the perimeter"""
        assert close(boundary_point(square_body, 1.5 + 4.0), 1.0, 0.5)
        assert close(boundary_point(square_body, 1.5 - 8.0), 1.0, 0.5)

    def test_periodicity(self, stadium_1_2):
        """Test boundary points repeat after one perimeter"""
        L = stadium_1_2.perimeter
        for s in np.linspace(0.0, L, 37):
            p = boundary_point(stadium_1_2, s)
            q = boundary_point(stadium_1_2, s + L)
            assert p.distance(q) <= 1e-12 * L

    def test_chord_never_exceeds_arc(self, stadium_1_2):
        """Test chords are never longer than their arc"""
        s = np.linspace(0.0, stadium_1_2.perimeter, 200)
        for h in (1e-3, 0.1, 1.0, 3.0):
            diff = stadium_1_2.points(s + h) - stadium_1_2.points(s)
            assert np.all(np.hypot(diff[:, 0], diff[:, 1]) <= h * (1 + 1e-12))

    def test_vectorised_matches_scalar(self, stadium_1_2):
        """Test array evaluation matches scalar evaluation"""
        s = np.array([0.3, 2.0, 5.5, 9.0])
        points = stadium_1_2.points(s)
        for k, value in enumerate(s):
            assert np.allclose(points[k], stadium_1_2.points(float(value)), atol=1e-15)


class TestBoundaryTangent:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    def test_disk(self, unit_disk):
        """Test the disk tangent at the start point"""
        assert close(boundary_tangent(unit_disk, 0.0), 0.0, 1.0)

    def test_square_bottom_edge(self, square_body):
        """Test the tangent along the bottom edge of the square"""
        assert close(boundary_tangent(square_body, 0.5), 1.0, 0.0)

    def test_square_corner_raises(self, square_body):
        """Test tangents at a square corner raise AtVertex"""
        with pytest.raises(AtVertex) as exc:
            boundary_tangent(square_body, 1.0)
        assert exc.value.s == 1.0

    def test_stadium_flat_parts(self, stadium_1_2):
        """Test tangents on both flat sides of the stadium"""
        p = 2.0 + math.pi
        assert close(boundary_tangent(stadium_1_2, 1.0), 1.0, 0.0)
        assert close(boundary_tangent(stadium_1_2, p + 1.0), -1.0, 0.0)

    def test_smooth_junction_allowed(self, stadium_1_2):
        """Test a C1 junction has a tangent"""
        # segment-to-arc junctions of a stadium are C1
        t = boundary_tangent(stadium_1_2, 2.0)
        assert close(t, 1.0, 0.0, tol=1e-12)

    def test_finite_difference(self, stadium_1_2):
        """Test tangents against a finite difference of points"""
        h = 1e-6
        for s in (0.5, 2.7, 4.1, 6.3, 8.9):
            fd = (stadium_1_2.points(s + h) - stadium_1_2.points(s - h)) / (2 * h)
            t = boundary_tangent(stadium_1_2, s)
            assert abs(fd[0] - t.x) < 1e-6
            assert abs(fd[1] - t.y) < 1e-6


class TestShapes:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    @pytest.mark.parametrize("R,d,expected", [
        (1.0, 2.0, 2 * (2 + math.pi)),
        (1.0, 0.0, 2 * math.pi),
        (0.5, 1.0, 2 * (1 + math.pi / 2)),
    ])
    def test_stadium_perimeter(self, R, d, expected):
        """Test stadium perimeters for several R and d"""
        body = make_stadium(StadiumParams(R=R, d=d))
        assert body.perimeter == pytest.approx(expected, rel=1e-14)

    def test_stadium_pieces(self, stadium_1_2):
        """Test the stadium is two segments and two arcs without corners"""
        kinds = [p.kind for p in stadium_1_2.pieces]
        assert kinds == ['segment', 'arc', 'segment', 'arc']
        assert stadium_1_2.corners.size == 0

    @pytest.mark.parametrize("R,d", [(0.0, 1.0), (-1.0, 1.0), (1.0, -0.5)])
    def test_stadium_invalid_params(self, R, d):
        """Test non-positive radius or negative length is rejected"""
        with pytest.raises(InvalidParams):
            StadiumParams(R=R, d=d)

    def test_regular_square(self):
        """Test a regular 4-gon of circumradius sqrt(2)/2 is the unit square"""
        body = make_regular_polygon(4, math.sqrt(2) / 2)
        assert body.perimeter == pytest.approx(4.0, rel=1e-14)
        assert body.is_polygon

    def test_regular_triangle(self, triangle_body):
        """Test the perimeter of the unit-circumradius triangle"""
        assert triangle_body.perimeter == pytest.approx(3 * math.sqrt(3), rel=1e-14)

    def test_regular_needs_three_sides(self):
        """Test regular polygons need three sides"""
        with pytest.raises(InvalidPolygon):
            make_regular_polygon(2, 1.0)

    def test_l_shape_not_convex(self, l_polygon):
        """Test the L-shape cannot become a convex body"""
        with pytest.raises(NotConvex):
            polygon_to_body(l_polygon)

    def test_polygon_to_body_keeps_perimeter(self, hexagon_polygon):
        """Test conversion keeps the polygon perimeter"""
        body = polygon_to_body(hexagon_polygon)
        assert body.perimeter == pytest.approx(hexagon_polygon.perimeter, rel=1e-15)

    def test_disk(self, unit_disk):
        """Test the unit disk is one arc of length 2pi"""
        assert unit_disk.perimeter == pytest.approx(2 * math.pi, rel=1e-15)
        assert len(unit_disk.pieces) == 1


class TestRandomBodies:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    def test_polygonal(self):
        """Test unsmoothed random bodies are polygons"""
        body = random_convex_body(seed=1, n_points=8, smoothing=0.0)
        assert body.is_polygon
        assert 3 <= len(body.pieces) <= 8

    def test_fully_smoothed_is_c1(self):
        """Test fully smoothed bodies have no corners"""
        body = random_convex_body(seed=1, n_points=8, smoothing=1.0)
        assert body.corners.size == 0
        assert any(p.kind == 'arc' for p in body.pieces)

    def test_partial_smoothing_keeps_segments(self):
        """Test partial smoothing keeps both segments and arcs"""
        body = random_convex_body(seed=3, n_points=10, smoothing=0.5)
        kinds = {p.kind for p in body.pieces}
        assert kinds == {'arc', 'segment'}
        assert body.corners.size == 0

    @pytest.mark.parametrize("smoothing", [-0.1, 1.5])
    def test_smoothing_out_of_range(self, smoothing):
        """Test smoothing outside [0, 1] is rejected"""
        with pytest.raises(InvalidParams):
            random_convex_body(seed=1, n_points=8, smoothing=smoothing)

    def test_deterministic(self):
        """Test the same seed gives the same body"""
        a = random_convex_body(seed=7, n_points=9, smoothing=0.3)
        b = random_convex_body(seed=7, n_points=9, smoothing=0.3)
        assert a.pieces == b.pieces

    def test_different_seeds_differ(self):
        """Test different seeds give different bodies"""
        a = random_convex_body(seed=7, n_points=9)
        b = random_convex_body(seed=8, n_points=9)
        assert a.pieces != b.pieces

    def test_too_few_points(self):
        """Test a degenerate hull is rejected"""
        with pytest.raises(DegenerateHull):
            random_convex_body(seed=1, n_points=2)

    def test_random_simple_polygon(self):
        """Test random simple polygons keep their vertex count"""
        poly = random_simple_polygon(seed=5, n_vertices=12)
        assert len(poly.vertices) == 12
        assert poly.area > 0

    def test_dent_makes_nonconvex(self, hexagon_polygon):
        """Test denting a vertex breaks convexity"""
        dented = dent_polygon(hexagon_polygon, 2)
        assert not dented.is_convex
        assert dented.area < hexagon_polygon.area


class TestShapeFromName:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    def test_builtins(self):
        """Test the built-in shape names"""
        assert shape_from_name('disk').perimeter == pytest.approx(2 * math.pi)
        assert shape_from_name('square').perimeter == pytest.approx(4.0)
        assert shape_from_name('triangle').perimeter == pytest.approx(3 * math.sqrt(3))

    def test_stadium(self):
        """Test stadium:R:d names"""
        assert shape_from_name('stadium:1:2').perimeter == pytest.approx(2 * (2 + math.pi))

    def test_regular(self):
        """Test regular:k names"""
        body = shape_from_name('regular:5')
        assert len(body.pieces) == 5

    @pytest.mark.parametrize("name", ['blob', 'stadium:x:2', 'regular:', 'stadium:1'])
    def test_unknown(self, name):
        """Test malformed shape names raise ParseError"""
        with pytest.raises(ParseError):
            shape_from_name(name)


class TestLoadPolygon:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    def test_text_file(self, square_file):
        """Test loading a whitespace-separated vertex file"""
        poly = load_polygon(square_file)
        assert poly.perimeter == pytest.approx(4.0)

    def test_json_file(self, temp_dir):
        """Test loading a JSON list of pairs"""
        path = temp_dir / "square.json"
        path.write_text(json.dumps([[0, 0], [1, 0], [1, 1], [0, 1]]))
        assert load_polygon(path).area == pytest.approx(1.0)

    def test_clockwise_reversed(self, temp_dir):
        """Test clockwise files load with positive area"""
        path = temp_dir / "cw.txt"
        path.write_text("0 0\n0 1\n1 1\n1 0\n")
        poly = load_polygon(path)
        assert poly.area == pytest.approx(1.0)

    def test_missing_file(self, temp_dir):
        """Test a missing file raises ParseError"""
        with pytest.raises(ParseError):
            load_polygon(temp_dir / "missing.txt")

    def test_malformed_line(self, temp_dir):
        """Test a non-numeric coordinate raises ParseError"""
        path = temp_dir / "bad.txt"
        path.write_text("0 0\n1 zero\n1 1\n")
        with pytest.raises(ParseError):
            load_polygon(path)

    def test_self_intersecting(self, temp_dir):
        """Test a bow-tie raises InvalidPolygon"""
        path = temp_dir / "bowtie.txt"
        path.write_text("0 0\n2 2\n2 0\n0 2\n")
        with pytest.raises(InvalidPolygon):
            load_polygon(path)

    def test_save_and_load(self, temp_dir, hexagon_polygon):
        """Test saved polygons load back unchanged"""
        path = temp_dir / "hexagon.txt"
        save_polygon(hexagon_polygon, path)
        assert load_polygon(path).coordinates == hexagon_polygon.coordinates
