"""Unimodular maps, corner blow-ups and standard polygons"""
import logging
from typing import List, Sequence, Tuple

from errors import CornerMismatch, CutTooLarge, Degenerate, DomainError, NotConvex, NotUnimodular
from .lattice_polygon import LatticePolygon, Point, lattice_length, parse_polygon, primitive

logger = logging.getLogger(__name__)

Matrix = Sequence[Sequence[int]]


def apply_unimodular(
    polygon: LatticePolygon,
    m: Matrix,
    t: Tuple[int, int] = (0, 0)
) -> LatticePolygon:
    """
    Image of a polygon under v -> m v + t.

    Args:
        polygon: Source polygon
        m: 2x2 integer matrix with determinant ±1
        t: Integer translation

    Returns:
        Canonical image polygon

    Raises:
        NotUnimodular: |det m| != 1
    """
    (m00, m01), (m10, m11) = m
    determinant = m00 * m11 - m01 * m10
    if abs(determinant) != 1:
        raise NotUnimodular(f"matrix {m} has determinant {determinant}")

    image = [
        (m00 * x + m01 * y + t[0], m10 * x + m11 * y + t[1])
        for x, y in polygon.vertices
    ]
    return parse_polygon(image)


def _drop_repeats(points: List[Point]) -> List[Point]:
    out: List[Point] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def blow_up_corner(polygon: LatticePolygon, b: int, m: int = 1) -> LatticePolygon:
    """
    Cut the bottom-right corner of a polygon.

    The corner C joins the bottom horizontal edge to a right edge of
    downward direction (n,-1). The bottom edge loses b*m lattice steps and
    an edge of direction (n-m,-1) and lattice length b is inserted.

    Args:
        polygon: Polygon with a bottom horizontal edge
        b: Lattice length of the inserted edge (0 leaves the polygon unchanged)
        m: Index of the new corner (1 is an ordinary blow-up)

    Returns:
        The cut polygon

    Raises:
        CornerMismatch: no bottom edge, or the next edge is not of the form (n,-1)
        CutTooLarge: b*m exceeds the bottom edge, b exceeds the right edge,
            or the cut polygon is not convex
    """
    if b < 0 or m < 1:
        raise DomainError(f"blow-up needs b >= 0 and m >= 1, got b={b}, m={m}")

    vs = list(polygon.vertices)
    vectors = polygon.edge_vectors()
    count = len(vs)
    bottom = next((k for k, v in enumerate(vectors) if v[1] == 0 and v[0] > 0), None)
    if bottom is None:
        raise CornerMismatch("polygon has no bottom horizontal edge")

    corner_idx = (bottom + 1) % count
    corner = vs[corner_idx]
    right_vector = vectors[corner_idx]
    px, py = primitive(right_vector)
    if py != 1:
        raise CornerMismatch(f"edge after the bottom-right corner has direction {(px, py)}")
    n = -px

    if b == 0:
        return polygon

    e_bot = lattice_length(vectors[bottom])
    right_length = lattice_length(right_vector)
    if b * m > e_bot:
        raise CutTooLarge(f"cut b*m = {b * m} exceeds bottom edge length {e_bot}")
    if b > right_length:
        raise CutTooLarge(f"cut b = {b} exceeds right edge length {right_length}")

    new_bottom = (corner[0] - b * m, corner[1])
    new_top = (corner[0] - b * n, corner[1] + b)
    points = vs[:corner_idx] + [new_bottom, new_top] + vs[corner_idx + 1:]

    try:
        cut = parse_polygon(_drop_repeats(points))
    except (NotConvex, Degenerate) as e:
        raise CutTooLarge(f"cut b={b}, m={m} does not leave a convex polygon: {e}") from e

    logger.debug(f"[blow_up_corner] b={b} m={m}: {list(polygon.vertices)} -> {list(cut.vertices)}")
    return cut


# ═══════════════════════════════════════════════════════════
# STANDARD POLYGONS
# ═══════════════════════════════════════════════════════════

def cp2_triangle(d: int) -> LatticePolygon:
    """Triangle (0,0),(d,0),(0,d)."""
    return parse_polygon([(0, 0), (d, 0), (0, d)])


def rectangle(width: int, height: int) -> LatticePolygon:
    return parse_polygon([(0, 0), (width, 0), (width, height), (0, height)])


def delta_ab(a: int, b: int) -> LatticePolygon:
    """Quadrilateral (0,0),(a-b,0),(a-b,b),(0,a): the degree-a triangle with a corner of size b cut."""
    return parse_polygon([(0, 0), (a - b, 0), (a - b, b), (0, a)])


def delta_ab_prime(a: int, b: int) -> LatticePolygon:
    """Quadrilateral (0,0),(a,0),(b,a-b),(0,a-b), congruent to delta_ab(a, b)."""
    return parse_polygon([(0, 0), (a, 0), (b, a - b), (0, a - b)])


# Maps delta_ab(a, b) onto delta_ab_prime(a, b) together with translation (a, 0)
DELTA_AB_MATRIX = ((-1, -1), (1, 0))
