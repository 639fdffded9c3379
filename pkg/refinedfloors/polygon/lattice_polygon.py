"""LatticePolygon - convex lattice polygons in canonical form"""
import logging
from math import gcd
from numbers import Integral
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from errors import Degenerate, NotConvex, NotLattice

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


class LatticePolygon(BaseModel):
    """
    Convex lattice polygon.

    Vertices are genuine corners listed counterclockwise, starting at the
    lexicographically smallest one. Build instances with parse_polygon().
    """
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[Tuple[int, int], ...] = Field(
        description="Corners in counterclockwise order, canonical start"
    )

    @field_validator("vertices")
    @classmethod
    def _at_least_three(cls, value):
        if len(value) < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        return value

    def edges(self) -> List[Tuple[Point, Point]]:
        """Counterclockwise edges as (start, end) pairs."""
        n = len(self.vertices)
        return [(self.vertices[k], self.vertices[(k + 1) % n]) for k in range(n)]

    def edge_vectors(self) -> List[Point]:
        return [(b[0] - a[0], b[1] - a[1]) for a, b in self.edges()]

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}


def cross(o: Point, a: Point, b: Point) -> int:
    """z-component of (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def det(u: Point, v: Point) -> int:
    return u[0] * v[1] - u[1] * v[0]


def lattice_length(vector: Point) -> int:
    """Number of lattice steps along an integer vector (gcd of coordinates)."""
    return gcd(abs(vector[0]), abs(vector[1]))


def primitive(vector: Point) -> Point:
    length = lattice_length(vector)
    if length == 0:
        raise Degenerate("zero vector has no primitive direction")
    return (vector[0] // length, vector[1] // length)


def area2(polygon: LatticePolygon) -> int:
    """Twice the area (shoelace), an exact integer."""
    vs = polygon.vertices
    n = len(vs)
    return abs(sum(det(vs[k], vs[(k + 1) % n]) for k in range(n)))


def boundary_count(polygon: LatticePolygon) -> int:
    return sum(lattice_length(v) for v in polygon.edge_vectors())


def interior_count(polygon: LatticePolygon) -> int:
    """Interior lattice points by Pick's theorem."""
    twice = area2(polygon) - boundary_count(polygon) + 2
    return twice // 2


def _coerce_coordinate(value) -> int:
    if isinstance(value, bool):
        raise NotLattice(f"coordinate {value!r} is not an integer")
    if isinstance(value, Integral):
        return int(value)
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise NotLattice(f"coordinate {value!r} is not an integer")


def _convex_hull(points: List[Point]) -> List[Point]:
    """Monotone chain hull, counterclockwise from the smallest point, collinear points dropped."""
    pts = sorted(points)

    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return lower[:-1] + upper[:-1]


def _boundary_key(point: Point, hull: List[Point]) -> Tuple[int, int]:
    """(edge index, progress along the edge) of a boundary point, corners at progress 0."""
    n = len(hull)
    for k in range(n):
        a, b = hull[k], hull[(k + 1) % n]
        if point == a:
            return k, 0
        if cross(a, b, point) == 0 and \
                min(a[0], b[0]) <= point[0] <= max(a[0], b[0]) and \
                min(a[1], b[1]) <= point[1] <= max(a[1], b[1]):
            return k, (point[0] - a[0]) * (b[0] - a[0]) + (point[1] - a[1]) * (b[1] - a[1])
    raise NotConvex(f"point {point} lies strictly inside the polygon")


def _is_cyclic_order(keys: List[Tuple[int, int]]) -> bool:
    """True when the keys walk the boundary once, in either direction."""
    n = len(keys)
    descents = sum(keys[(k + 1) % n] < keys[k] for k in range(n))
    return descents in (1, n - 1)


def parse_polygon(vertex_list: Sequence[Sequence]) -> LatticePolygon:
    """
    Validate and normalize a list of lattice points into a LatticePolygon.

    Every listed point must lie on the boundary of the convex hull of the
    list, and the list must walk that boundary once in either direction;
    points in the middle of an edge are elided.

    Args:
        vertex_list: Sequence of [x, y] integer pairs

    Returns:
        Canonical LatticePolygon

    Raises:
        NotLattice: a coordinate is not an integer
        Degenerate: fewer than 3 points, repeated points, or zero area
        NotConvex: a point lies strictly inside the hull of the others, or
            the list is not in boundary order
    """
    points: List[Point] = []
    for raw in vertex_list:
        if len(raw) != 2:
            raise NotLattice(f"point {raw!r} does not have two coordinates")
        points.append((_coerce_coordinate(raw[0]), _coerce_coordinate(raw[1])))

    if len(points) < 3:
        raise Degenerate(f"need at least 3 points, got {len(points)}")
    if len(set(points)) != len(points):
        raise Degenerate("repeated vertices")

    hull = _convex_hull(points)
    if len(hull) < 3:
        raise Degenerate("all points are collinear (area 0)")

    keys = [_boundary_key(p, hull) for p in points]
    if not _is_cyclic_order(keys):
        raise NotConvex(f"{list(points)} is not listed in boundary order (the path crosses itself)")

    polygon = LatticePolygon(vertices=tuple(hull))
    logger.debug(f"[parse_polygon] {list(points)} -> {list(polygon.vertices)}")
    return polygon
