"""
Unit tests for lattice polygons and their h-transverse data.

Tests cover:
- Parsing and normalization (orientation, canonical start, elided points)
- Rejection of non-lattice, degenerate and non-convex input
- h-transverse data of the reference polygons
- Hypothesis checks and statement selection
- Unimodular maps and corner blow-ups
"""
import json
import random

import pytest

from errors import (
    CutTooLarge, Degenerate, MalformedPolygon, NotConvex, NotHTransverse, NotLattice, NotUnimodular,
)
from polygon import (
    DELTA_AB_MATRIX, PolygonToolkit, TheoremSelector, apply_unimodular, area2, blow_up_corner,
    boundary_count, check_hypotheses, cp2_triangle, delta_ab, delta_ab_prime, h_transverse_data,
    interior_count, load_polygon, max_valid_codegree, parse_polygon, rectangle, select_theorem,
)

HEPTAGON = [[0, 0], [1, 0], [3, 1], [3, 2], [2, 3], [1, 3], [0, 2]]
TRAPEZOID = [[0, 0], [32, 0], [32, 7], [18, 14], [0, 14]]

ELEMENTARY = [((1, 1), (0, 1)), ((1, 0), (1, 1)), ((0, 1), (1, 0)), ((-1, 0), (0, 1))]
REFLECT_X = ((-1, 0), (0, 1))


def _compose(m, n):
    return tuple(
        tuple(sum(m[r][k] * n[k][c] for k in range(2)) for c in range(2))
        for r in range(2)
    )


def _strict_interior_points(polygon):
    """Brute-force count of lattice points strictly inside a counterclockwise polygon."""
    xs = [v[0] for v in polygon.vertices]
    ys = [v[1] for v in polygon.vertices]
    count = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if all((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) > 0
                   for a, b in polygon.edges()):
                count += 1
    return count


class TestParsePolygon:
    """Test validation and normalization of vertex lists"""

    def test_counterclockwise_from_smallest_vertex(self):
        """Test clockwise input is reoriented and rotated to the smallest corner"""
        polygon = parse_polygon([[0, 3], [3, 0], [0, 0]])
        assert polygon.vertices == ((0, 0), (3, 0), (0, 3))

    def test_points_on_edges_are_elided(self):
        """Test a point in the middle of an edge is not kept as a vertex"""
        polygon = parse_polygon([[0, 0], [1, 0], [2, 0], [2, 2], [0, 2]])
        assert polygon.vertices == ((0, 0), (2, 0), (2, 2), (0, 2))

    def test_integral_floats_are_accepted(self):
        """Test 2.0 is read as the lattice coordinate 2"""
        polygon = parse_polygon([[0, 0], [2.0, 0], [0, 2]])
        assert polygon.vertices[1] == (2, 0)

    def test_fractional_coordinate_rejected(self):
        """Test non-integer coordinates raise NotLattice"""
        with pytest.raises(NotLattice):
            parse_polygon([[0, 0], [1.5, 0], [0, 2]])

    def test_collinear_points_rejected(self):
        """Test zero-area input raises Degenerate"""
        with pytest.raises(Degenerate):
            parse_polygon([[0, 0], [1, 1], [2, 2]])

    def test_too_few_points_rejected(self):
        """Test two points raise Degenerate"""
        with pytest.raises(Degenerate):
            parse_polygon([[0, 0], [1, 0]])

    def test_repeated_points_rejected(self):
        """Test duplicate vertices raise Degenerate"""
        with pytest.raises(Degenerate):
            parse_polygon([[0, 0], [2, 0], [2, 0], [0, 2]])

    def test_interior_point_rejected(self):
        """Test a listed point strictly inside the hull raises NotConvex"""
        with pytest.raises(NotConvex):
            parse_polygon([[0, 0], [4, 0], [1, 1], [0, 4]])

    def test_crossing_order_rejected(self):
        """Test corners of a square listed as a bow tie raise NotConvex"""
        with pytest.raises(NotConvex):
            parse_polygon([[0, 0], [2, 2], [2, 0], [0, 2]])

    def test_clockwise_walk_with_edge_point(self):
        """Test a clockwise walk through an edge midpoint is in boundary order"""
        polygon = parse_polygon([[0, 2], [2, 2], [2, 0], [1, 0], [0, 0]])
        assert polygon == rectangle(2, 2)

    def test_to_json_lists_vertices(self):
        """Test to_json emits plain lists"""
        assert rectangle(1, 1).to_json() == {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}


class TestLoadPolygon:
    """Test the JSON front door used by the CLI"""

    def test_inline_list(self):
        """Test a bare JSON list of pairs"""
        assert load_polygon("[[0,0],[3,0],[0,3]]") == cp2_triangle(3)

    def test_inline_object(self):
        """Test the {"vertices": ...} form"""
        assert load_polygon('{"vertices": [[0,0],[3,0],[0,3]]}') == cp2_triangle(3)

    def test_file_path(self, tmp_path):
        """Test reading a polygon from a JSON file"""
        path = tmp_path / "triangle.json"
        path.write_text(json.dumps({"vertices": [[0, 0], [3, 0], [0, 3]]}), encoding="utf-8")
        assert load_polygon(str(path)) == cp2_triangle(3)

    def test_object_without_vertices(self):
        """Test an object missing the "vertices" key raises MalformedPolygon"""
        with pytest.raises(MalformedPolygon, match="vertices"):
            load_polygon('{"verts": [[0,0],[3,0],[0,3]]}')

    def test_list_of_scalars(self):
        """Test a list that is not made of pairs raises MalformedPolygon"""
        with pytest.raises(MalformedPolygon):
            load_polygon("[0, 3, 0]")


class TestHTransverseData:
    """Test the combinatorial data of the reference polygons"""

    def test_triangle(self, delta1):
        """Test the degree-3 triangle"""
        assert delta1.a == 3
        assert delta1.e_top == 0
        assert delta1.e_bot == 3
        assert delta1.y == 9
        assert delta1.chi == 3
        assert delta1.s_max == 4
        assert delta1.L == [0, 0, 0]
        assert delta1.R == [1, 1, 1]
        assert delta1.interior == 1
        assert delta1.d_F == 1
        assert delta1.is_non_singular

    def test_heptagon(self, delta2):
        """Test the heptagon with one vertex of index 2"""
        assert delta2.a == 3
        assert delta2.e_top == 1
        assert delta2.e_bot == 1
        assert delta2.y == 8
        assert delta2.s_max == 3
        assert delta2.L == [-1, 0, 0]
        assert delta2.R == [-2, 0, 1]
        assert delta2.chi == 7
        assert delta2.d_F == 2
        assert delta2.interior == 4
        assert delta2.area2 == 14
        assert delta2.n_k == {1: 6, 2: 1}
        assert not delta2.is_non_singular

    def test_unit_square(self, unit_square):
        """Test the smallest polygon with two horizontal edges"""
        assert unit_square.a == 1
        assert unit_square.y == 4
        assert unit_square.chi == 4
        assert unit_square.L == [0]
        assert unit_square.R == [0]
        assert unit_square.interior == 0
        assert unit_square.d_F == 0
        assert unit_square.vertical_ray_count == 2

    def test_square_of_side_seven(self, rect7):
        """Test the 7x7 square"""
        assert rect7.y == 28
        assert rect7.chi == 4
        assert rect7.interior == 36

    def test_trapezoid_singular_counts(self, trapezoid):
        """Test n_k and zero filling of singular_counts"""
        assert trapezoid.y == 78
        assert trapezoid.n_k == {1: 4, 2: 1}
        assert trapezoid.singular_counts(3) == {1: 4, 2: 1, 3: 0}

    def test_not_h_transverse(self):
        """Test an edge of direction (1,3) raises NotHTransverse"""
        polygon = parse_polygon([[0, 0], [2, 0], [3, 1], [3, 2], [1, 3]])
        with pytest.raises(NotHTransverse):
            h_transverse_data(polygon)

    def test_toolkit_data_is_lazy_and_cached(self):
        """Test PolygonToolkit computes the data once"""
        toolkit = PolygonToolkit([[0, 0], [3, 0], [0, 3]])
        assert toolkit.data is toolkit.data


class TestHypotheses:
    """Test the sufficient conditions of the universality statements"""

    def test_square_two_rays(self, rect7):
        """Test the 7x7 square satisfies the two-ray conditions at i=1"""
        assert select_theorem(rect7) == TheoremSelector.NONSINGULAR_TWO_RAYS
        report = check_hypotheses(rect7, 1, 0, TheoremSelector.NONSINGULAR_TWO_RAYS)
        assert report.satisfied
        assert report.failing is None

    def test_square_fails_at_codegree_two(self, rect7):
        """Test Δ > 2(i+2) stops the 7x7 square at i=2"""
        report = check_hypotheses(rect7, 2, 0, TheoremSelector.NONSINGULAR_TWO_RAYS)
        assert not report.satisfied
        assert report.failing == "Δ > 8"
        assert max_valid_codegree(rect7, 0, TheoremSelector.NONSINGULAR_TWO_RAYS) == 1

    def test_projective_plane_triangle(self):
        """Test the degree-17 triangle is covered at i=1 and degree 12 is not"""
        d17 = h_transverse_data(cp2_triangle(17))
        assert select_theorem(d17) == TheoremSelector.CP2
        assert check_hypotheses(d17, 1, 0, TheoremSelector.CP2).satisfied

        d12 = h_transverse_data(cp2_triangle(12))
        report = check_hypotheses(d12, 1, 0, TheoremSelector.CP2)
        assert not report.satisfied
        assert report.failing == "Δ > 16"

    def test_singular_selector(self, delta2):
        """Test a singular polygon with two horizontal edges"""
        assert select_theorem(delta2) == TheoremSelector.SINGULAR_TWO_RAYS

    def test_no_statement(self):
        """Test a polygon without horizontal edges is not covered"""
        toolkit = PolygonToolkit([[1, 0], [2, 1], [1, 2], [0, 1]])
        assert select_theorem(toolkit.data) is None
        assert toolkit.hypotheses(0, 0) is None

    def test_pairing_order_out_of_range(self, delta1):
        """Test s above s_max is a domain error"""
        with pytest.raises(ValueError):
            check_hypotheses(delta1, 0, delta1.s_max + 1, TheoremSelector.STAR)


class TestTransforms:
    """Test unimodular maps and corner cuts"""

    def test_delta_ab_matrix(self):
        """Test the fixed matrix maps Δ(a,b) onto Δ'(a,b)"""
        image = apply_unimodular(delta_ab(5, 2), DELTA_AB_MATRIX, (5, 0))
        assert image == delta_ab_prime(5, 2)

    def test_data_invariant_under_unimodular_map(self):
        """Test y, chi and interior survive a shear"""
        before = h_transverse_data(rectangle(3, 2))
        after = h_transverse_data(apply_unimodular(rectangle(3, 2), ((1, 1), (0, 1))))
        assert (after.y, after.chi, after.interior) == (before.y, before.chi, before.interior)

    @pytest.mark.parametrize("vertices", [
        [[0, 0], [3, 0], [0, 3]],
        HEPTAGON,
        [[0, 0], [3, 0], [3, 2], [0, 2]],
    ])
    def test_lattice_counts_under_random_maps(self, vertices):
        """Test area, boundary and interior counts survive 100 random unimodular maps"""
        rng = random.Random(20240917)
        polygon = parse_polygon(vertices)
        expected = (area2(polygon), boundary_count(polygon), interior_count(polygon))
        for _ in range(100):
            matrix = ((1, 0), (0, 1))
            for _ in range(rng.randint(1, 5)):
                matrix = _compose(rng.choice(ELEMENTARY), matrix)
            shift = (rng.randint(-10, 10), rng.randint(-10, 10))
            image = apply_unimodular(polygon, matrix, shift)
            assert (area2(image), boundary_count(image), interior_count(image)) == expected
            assert _strict_interior_points(image) == expected[2]

    @pytest.mark.parametrize("vertices", [
        [[0, 0], [3, 0], [0, 3]],
        HEPTAGON,
        [[0, 0], [3, 0], [3, 2], [0, 5]],
        TRAPEZOID,
    ])
    def test_reflection_swaps_sides(self, vertices):
        """Test x -> -x exchanges L and R up to sign and keeps y, chi and d_F"""
        before = h_transverse_data(parse_polygon(vertices))
        after = h_transverse_data(apply_unimodular(parse_polygon(vertices), REFLECT_X))
        assert after.L == sorted(-r for r in before.R)
        assert after.R == sorted(-l for l in before.L)
        assert (after.y, after.chi, after.d_F, after.interior) == \
            (before.y, before.chi, before.d_F, before.interior)

    def test_non_unimodular_rejected(self):
        """Test det != ±1 raises NotUnimodular"""
        with pytest.raises(NotUnimodular):
            apply_unimodular(rectangle(2, 2), ((2, 0), (0, 1)))

    def test_blow_up_triangle(self):
        """Test cutting b=5 from the degree-17 triangle"""
        cut = blow_up_corner(cp2_triangle(17), 5, 1)
        assert cut.vertices == ((0, 0), (12, 0), (12, 5), (0, 17))

    def test_blow_up_square(self):
        """Test an ordinary blow-up of the 7x7 square"""
        cut = blow_up_corner(rectangle(7, 7), 1, 1)
        assert cut.vertices == ((0, 0), (6, 0), (7, 1), (7, 7), (0, 7))

    @pytest.mark.parametrize("vertices,b,m", [
        ([[0, 0], [7, 0], [7, 7], [0, 7]], 1, 1),
        ([[0, 0], [7, 0], [7, 7], [0, 7]], 2, 2),
        ([[0, 0], [17, 0], [0, 17]], 5, 1),
        ([[0, 0], [5, 0], [5, 3], [0, 3]], 1, 3),
        (TRAPEZOID, 2, 2),
        (TRAPEZOID, 7, 1),
    ])
    def test_blow_up_removes_corner_triangle(self, vertices, b, m):
        """Test a cut removes area m*b^2/2 and the cut polygon still satisfies Pick"""
        polygon = parse_polygon(vertices)
        cut = blow_up_corner(polygon, b, m)
        assert area2(polygon) - area2(cut) == m * b * b
        assert _strict_interior_points(cut) == interior_count(cut)
        assert h_transverse_data(cut).interior == interior_count(cut)
        assert len(cut.vertices) in (len(polygon.vertices), len(polygon.vertices) + 1)

    def test_blow_up_zero_is_identity(self):
        """Test b=0 returns the polygon unchanged"""
        assert blow_up_corner(rectangle(3, 3), 0) == rectangle(3, 3)

    def test_toolkit_blow_up(self):
        """Test the facade cut adds one vertex and loses the cut corner point"""
        cut = PolygonToolkit(rectangle(7, 7)).blow_up(1)
        assert cut.data.chi == 5
        assert cut.data.y == boundary_count(cut.polygon) == 27

    def test_toolkit_transform(self):
        """Test the facade applies the Δ(a,b) matrix"""
        moved = PolygonToolkit(delta_ab(5, 2)).transform(DELTA_AB_MATRIX, (5, 0))
        assert moved.polygon == delta_ab_prime(5, 2)

    def test_cut_too_large(self):
        """Test a cut longer than the bottom edge raises CutTooLarge"""
        with pytest.raises(CutTooLarge):
            blow_up_corner(rectangle(3, 3), 2, 2)


pytestmark = pytest.mark.polygon
