import math

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from traceconst.cauchy.perimeter import (
    convexity_gap, count_crossings, crossing_integral, essential_projection_extent,
    perimeter_by_crossings, perimeter_by_projections, project, quadrature_angles,
)
from traceconst.cauchy.triangulation import triangulate
from traceconst.errors import InvalidPolygon, OutOfRange, TriangulationFailure
from traceconst.geom.shapes import dent_polygon, random_simple_polygon, regular_polygon
from traceconst.models.cauchy import Direction
from traceconst.models.polygon import Polygon
from traceconst.utils.logging import LoggerSetup

N = 4096


def random_convex_polygon(seed: int, n_points: int = 10) -> Polygon:
    rng = np.random.default_rng(seed)
    points = rng.uniform(-1.0, 1.0, size=(n_points, 2))
    return Polygon.from_coordinates(points[ConvexHull(points).vertices])


def deepest_dent(poly: Polygon):
    """Dented variant at the vertex whose removal shortens the boundary most"""
    pts = np.asarray(poly.coordinates)
    prev, nxt = np.roll(pts, 1, axis=0), np.roll(pts, -1, axis=0)
    excess = (np.hypot(*(pts - prev).T) + np.hypot(*(nxt - pts).T)
              - np.hypot(*(nxt - prev).T))
    for index in np.argsort(-excess):
        if excess[index] < 1e-2:
            break
        try:
            return dent_polygon(poly, int(index))
        except InvalidPolygon:
            continue
    return None


class TestDirection:
    def test_frame(self):
        """Test the normal and its perpendicular at a quarter turn"""
        d = Direction.from_angle(math.pi / 2)
        assert d.nu.x == pytest.approx(0.0, abs=1e-15)
        assert d.nu_perp.x == pytest.approx(-1.0)

    def test_angle_reduced(self):
        """Test negative angles are reduced into [0, 2pi)"""
        assert Direction.from_angle(-math.pi / 2).theta == pytest.approx(1.5 * math.pi)

    def test_quadrature_angles_offset(self):
        """Test quadrature angles start half a step off zero"""
        thetas = quadrature_angles(16)
        assert thetas[0] == pytest.approx(math.pi / 16)
        assert thetas[-1] < 2 * math.pi


class TestTriangulation:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    @staticmethod
    def total_area(tris):
        u = tris[:, 1] - tris[:, 0]
        v = tris[:, 2] - tris[:, 0]
        return 0.5 * np.abs(u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]).sum()

    def test_square(self, square_polygon):
        """Test the unit square splits into two triangles"""
        tris = triangulate(square_polygon.coordinates)
        assert tris.shape == (2, 3, 2)
        assert self.total_area(tris) == pytest.approx(1.0)

    def test_l_shape(self, l_polygon):
        """Test the L-shape triangulates with its full area"""
        tris = triangulate(l_polygon.coordinates)
        assert len(tris) == 4
        assert self.total_area(tris) == pytest.approx(0.75)

    def test_star(self, star):
        """Test triangle areas of the star add up to its area"""
        assert self.total_area(triangulate(star.coordinates)) == pytest.approx(star.area)

    def test_clockwise_input(self, l_polygon):
        """Test clockwise vertex order is accepted"""
        tris = triangulate(l_polygon.coordinates[::-1])
        assert self.total_area(tris) == pytest.approx(0.75)

    def test_collinear_vertex_dropped(self):
        """Test a vertex on a straight edge does not break ear clipping"""
        tris = triangulate([(0, 0), (0.5, 0), (1, 0), (1, 1), (0, 1)])
        assert self.total_area(tris) == pytest.approx(1.0)

    @pytest.mark.parametrize("seed", range(5))
    def test_random_simple(self, seed):
        """Test random simple polygons keep their area"""
        poly = random_simple_polygon(seed=seed, n_vertices=14)
        assert self.total_area(triangulate(poly.coordinates)) == pytest.approx(poly.area)

    def test_too_few_vertices(self):
        """Test triangulation fails below three vertices"""
        with pytest.raises(TriangulationFailure):
            triangulate([(0, 0), (1, 0)])


class TestPerDirection:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    def test_square_crossing_integral(self, square_polygon):
        """Test crossing integral of the square along an axis and a diagonal"""
        assert crossing_integral(square_polygon, Direction.from_angle(0.0)) == pytest.approx(2.0)
        diagonal = Direction.from_angle(math.pi / 4)
        assert crossing_integral(square_polygon, diagonal) == pytest.approx(2 * math.sqrt(2))

    def test_square_essential_extent(self, square_polygon):
        """Test projection extent of the square along an axis and a diagonal"""
        assert essential_projection_extent(square_polygon, Direction.from_angle(math.pi / 2)) == \
            pytest.approx(1.0)
        assert essential_projection_extent(square_polygon, Direction.from_angle(math.pi / 4)) == \
            pytest.approx(math.sqrt(2))

    def test_l_shape_horizontal(self, l_polygon):
        """Test the L-shape hides nothing from horizontal lines"""
        result = project(l_polygon, Direction.from_angle(0.0))
        assert result.essential_extent == pytest.approx(1.0)
        assert result.crossing_integral == pytest.approx(2.0)
        assert result.hidden_measure == pytest.approx(0.0, abs=1e-12)

    def test_l_shape_diagonal_hides_the_notch(self, l_polygon):
        """Test diagonal lines through the notch leave hidden measure"""
        # lines along (1, -1) through the notch cross the boundary four times
        result = project(l_polygon, Direction.from_angle(-math.pi / 4))
        assert result.hidden_measure > 0.1

    def test_essential_extent_bounded_by_crossings(self, star):
        """Test twice the extent never exceeds the crossing integral"""
        for theta in np.linspace(0.0, math.pi, 11):
            result = project(star, Direction.from_angle(float(theta)))
            assert 2 * result.essential_extent <= result.crossing_integral + 1e-12

    @pytest.mark.parametrize("seed", range(4))
    def test_brute_force_crossing_count(self, seed):
        """Test crossing integral against counting crossings line by line"""
        poly = random_simple_polygon(seed=seed, n_vertices=10)
        for theta in (0.3, 1.2, 2.5):
            d = Direction.from_angle(theta)
            assert count_crossings(poly, d) == pytest.approx(crossing_integral(poly, d), rel=1e-3)

    def test_rigid_motion(self, l_polygon):
        """Test per-direction values follow a rotation and shift"""
        moved = l_polygon.transformed(rotation=0.7, shift=(3.0, -2.0))
        d, d_moved = Direction.from_angle(1.1), Direction.from_angle(1.1 + 0.7)
        assert crossing_integral(moved, d_moved) == pytest.approx(crossing_integral(l_polygon, d), abs=1e-9)
        assert essential_projection_extent(moved, d_moved) == \
            pytest.approx(essential_projection_extent(l_polygon, d), abs=1e-9)


class TestPerimeters:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        LoggerSetup.setup_logging(level="DEBUG")

    def test_square(self, square_polygon):
        """Test both perimeter forms on the unit square"""
        assert perimeter_by_crossings(square_polygon, N) == pytest.approx(4.0, abs=1e-6)
        assert perimeter_by_projections(square_polygon, N) == pytest.approx(4.0, abs=1e-6)

    def test_hexagon(self, hexagon_polygon):
        """Test both perimeter forms on the unit hexagon"""
        assert perimeter_by_crossings(hexagon_polygon, N) == pytest.approx(6.0, abs=1e-5)
        assert perimeter_by_projections(hexagon_polygon, N) == pytest.approx(6.0, abs=1e-5)

    def test_many_sided_polygon(self):
        """Test the crossing form on a 64-gon"""
        poly = regular_polygon(64, 1.0)
        assert perimeter_by_crossings(poly, N) == pytest.approx(poly.perimeter, abs=1e-6)

    def test_l_shape(self, l_polygon):
        """Test the projection form gives the hull perimeter of the L-shape"""
        assert perimeter_by_crossings(l_polygon, N) == pytest.approx(4.0, abs=1e-6)
        hull_perimeter = 3.0 + math.sqrt(0.5)
        projections = perimeter_by_projections(l_polygon, N)
        assert projections == pytest.approx(hull_perimeter, abs=1e-5)
        assert projections < 4.0 - 1e-3

    def test_star_gap(self, star):
        """Test the star has a clear convexity gap"""
        assert convexity_gap(star, N) > 0.1

    @pytest.mark.parametrize("seed", range(20))
    def test_random_simple_polygons(self, seed):
        """Test the crossing form recovers the perimeter of random polygons"""
        poly = random_simple_polygon(seed=seed, n_vertices=6 + seed % 10)
        estimate = perimeter_by_crossings(poly, N)
        assert abs(estimate - poly.perimeter) / poly.perimeter < 1e-5

    def test_convex_polygons_have_no_gap(self):
        """Test convex polygons have no convexity gap"""
        for seed in range(20):
            assert abs(convexity_gap(random_convex_polygon(seed), N)) < 1e-6

    def test_dented_polygons_have_a_gap(self):
        """Test dented polygons have a positive convexity gap"""
        dented = [deepest_dent(random_convex_polygon(seed)) for seed in range(20)]
        dented = [poly for poly in dented if poly is not None]
        assert len(dented) >= 10
        for poly in dented:
            assert not poly.is_convex
            assert convexity_gap(poly, N) > 1e-3

    def test_grid_aligned_rotation(self, l_polygon):
        """Test rotations by a quadrature step leave both forms unchanged"""
        moved = l_polygon.transformed(rotation=5 * 2 * math.pi / N, shift=(1.5, 0.25))
        assert perimeter_by_crossings(moved, N) == pytest.approx(perimeter_by_crossings(l_polygon, N), abs=1e-9)
        assert perimeter_by_projections(moved, N) == pytest.approx(perimeter_by_projections(l_polygon, N), abs=1e-9)

    def test_threads_do_not_change_result(self, star):
        """Test thread count does not change the projection form"""
        assert perimeter_by_projections(star, N, threads=1) == perimeter_by_projections(star, N, threads=4)

    def test_quadrature_floor(self, square_polygon):
        """Test quadratures below the floor are rejected"""
        with pytest.raises(OutOfRange):
            perimeter_by_crossings(square_polygon, 8)
        with pytest.raises(OutOfRange):
            perimeter_by_projections(square_polygon, 15)
