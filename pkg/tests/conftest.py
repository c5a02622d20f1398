import pytest
import tempfile
import sys
from pathlib import Path

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from traceconst.geom.shapes import (  # noqa: E402
    l_shape, make_disk, make_regular_polygon, make_stadium, polygon_to_body,
    regular_polygon, star_polygon, unit_square,
)
from traceconst.models.stadium import StadiumParams  # noqa: E402


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests"""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def unit_disk():
    return make_disk(1.0)


@pytest.fixture
def square_polygon():
    return unit_square()


@pytest.fixture
def square_body(square_polygon):
    return polygon_to_body(square_polygon)


@pytest.fixture
def triangle_body():
    return make_regular_polygon(3, 1.0)


@pytest.fixture
def hexagon_polygon():
    return regular_polygon(6, 1.0)


@pytest.fixture
def l_polygon():
    return l_shape()


@pytest.fixture
def star():
    return star_polygon(5, 1.0, 0.4)


@pytest.fixture
def stadium_1_2():
    return make_stadium(StadiumParams(R=1.0, d=2.0))


@pytest.fixture
def stadium_1_half():
    return make_stadium(StadiumParams(R=1.0, d=0.5))


@pytest.fixture
def square_file(temp_dir):
    """Unit square in the plain-text polygon format"""
    path = temp_dir / "square.txt"
    path.write_text("# unit square\n0 0\n1 0\n1 1\n0 1\n", encoding='utf-8')
    return path


@pytest.fixture
def l_shape_file(temp_dir):
    path = temp_dir / "lshape.txt"
    path.write_text("0 0\n1 0\n1 0.5\n0.5 0.5\n0.5 1\n0 1\n", encoding='utf-8')
    return path

