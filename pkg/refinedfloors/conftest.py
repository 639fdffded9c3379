"""
pytest configuration file (conftest.py)

Puts the refinedfloors directory on the Python path so the area packages
import the same way from the command line and from PyCharm, and provides
the polygons the test files share.
"""
import sys
from pathlib import Path

import pytest

project_dir = Path(__file__).parent

if str(project_dir) not in sys.path:
    sys.path.insert(0, str(project_dir))

from polygon import h_transverse_data, parse_polygon, rectangle  # noqa: E402

TRIANGLE_3 = [[0, 0], [3, 0], [0, 3]]
HEPTAGON = [[0, 0], [1, 0], [3, 1], [3, 2], [2, 3], [1, 3], [0, 2]]
TRAPEZOID = [[0, 0], [32, 0], [32, 7], [18, 14], [0, 14]]


@pytest.fixture
def delta1():
    """Degree-3 triangle: three floors, three sources, one interior point"""
    return h_transverse_data(parse_polygon(TRIANGLE_3))


@pytest.fixture
def delta2():
    """Heptagon with one singular vertex"""
    return h_transverse_data(parse_polygon(HEPTAGON))


@pytest.fixture
def unit_square():
    return h_transverse_data(rectangle(1, 1))


@pytest.fixture
def rect5():
    return h_transverse_data(rectangle(5, 5))


@pytest.fixture
def rect7():
    """7x7 square: smallest square where <G>_1 is covered by the two-ray statement"""
    return h_transverse_data(rectangle(7, 7))


@pytest.fixture
def trapezoid():
    return h_transverse_data(parse_polygon(TRAPEZOID))
