"""
Unit tests for marking sums, refined invariants and their verification.

Tests cover:
- Pairings and their validation
- Marking counts and refined multiplicities of hand-built diagrams
- The memoized marking sums against the backtracking oracle
- G_Delta(s) of the reference polygons, its palindromy and pairing independence
- The denominator-free invariant and the tilde identity
- Coefficients against the universal polynomials
- Corner cuts and the partition-weighted class counts
"""
import pytest

from diagrams import FloorDiagram, enumerate_diagrams
from errors import DomainError, InvalidPairing
from invariants import (
    InvariantToolkit, Pairing, blowup_cardinality_check, count_markings, count_markings_oracle,
    default_pairing, invariant_coeff, invariant_result, map_classes, multiplicity_tilde, pair_shape,
    refined_invariant, resolve_pairing, star_invariant, star_multiplicities, sum_multiplicities,
    sum_multiplicities_oracle, tilde_identity_check, universal_value, validate_pairing,
    verify_star, verify_universal, welschinger_specialization,
)
from polygon import cp2_triangle, h_transverse_data, parse_polygon, rectangle
from qpoly import SymLaurent, TPoly, t_factor, tilde


Q_PLUS_TEN = SymLaurent({2: 1, 0: 10, -2: 1})
Q_PLUS_EIGHT = SymLaurent({2: 1, 0: 8, -2: 1})
BRACKET_TWO_SQUARED = SymLaurent({2: 1, 0: 2, -2: 1})


@pytest.fixture
def chain_two_one():
    """Triangle diagram of codegree 0: edge weights 2 then 1"""
    return FloorDiagram.from_parts(
        [(0, 1, 3, 0), (0, 1, 0, 0), (0, 1, 0, 0)],
        [(0, 1, 2), (1, 2, 1)],
    )


@pytest.fixture
def chain_one_one():
    """Triangle diagram of codegree 1: sources split 2 + 1"""
    return FloorDiagram.from_parts(
        [(0, 1, 2, 0), (0, 1, 1, 0), (0, 1, 0, 0)],
        [(0, 1, 1), (1, 2, 1)],
    )


@pytest.fixture
def cherry():
    """Triangle diagram of codegree 1 with two leaves"""
    return FloorDiagram.from_parts(
        [(0, 1, 3, 0), (0, 1, 0, 0), (0, 1, 0, 0)],
        [(0, 1, 1), (0, 2, 1)],
    )


def tilde_corpus():
    """Small polygons of various shapes for the tilde identity"""
    return [
        [[0, 0], [3, 0], [0, 3]],
        [[0, 0], [1, 0], [3, 1], [3, 2], [2, 3], [1, 3], [0, 2]],
        [[0, 0], [1, 0], [1, 1], [0, 1]],
        [[0, 0], [2, 0], [2, 2], [0, 2]],
        [[0, 0], [3, 0], [3, 2], [0, 2]],
        [[0, 0], [4, 0], [4, 1], [0, 1]],
        [[0, 0], [2, 0], [0, 2]],
        [[0, 0], [4, 0], [0, 4]],
        [[0, 0], [3, 0], [3, 1], [2, 2], [0, 2]],
        [[0, 0], [2, 0], [3, 1], [3, 2], [0, 2]],
    ]


class TestPairing:
    """Test pairings of marking positions"""

    def test_default(self):
        """Test {1,2}, {3,4}, ..."""
        S = default_pairing(2)
        assert S.pairs == ((1, 2), (3, 4))
        assert S.order == 2
        assert S.starts() == frozenset({1, 3})

    def test_validate_sorts(self):
        """Test explicit pairs are normalized"""
        S = validate_pairing([[6, 5], [1, 2]], 8, 4)
        assert S.to_json() == [[1, 2], [5, 6]]

    @pytest.mark.parametrize("pairs", [
        [[1, 3]],
        [[0, 1]],
        [[8, 9]],
        [[1, 2], [2, 3]],
        [[1, 2, 3]],
    ])
    def test_invalid(self, pairs):
        """Test non-consecutive, out-of-range, overlapping and malformed pairs"""
        with pytest.raises(InvalidPairing):
            validate_pairing(pairs, 8, 4)

    def test_order_above_maximum(self):
        """Test more pairs than s_max"""
        with pytest.raises(InvalidPairing):
            validate_pairing([[1, 2], [3, 4]], 8, 1)

    def test_resolve_checks_order(self, delta1):
        """Test s must match the explicit pairing and lie in 0..s_max"""
        assert resolve_pairing(delta1, 1, [[5, 6]]).pairs == ((5, 6),)
        with pytest.raises(InvalidPairing):
            resolve_pairing(delta1, 2, [[5, 6]])
        with pytest.raises(InvalidPairing):
            resolve_pairing(delta1, delta1.s_max + 1)


class TestMarkingCounts:
    """Test nu(D) on hand-built diagrams"""

    def test_triangle_diagrams(self, chain_two_one, chain_one_one, cherry):
        """Test the three triangle diagrams have 1, 5 and 3 markings"""
        assert count_markings(chain_two_one) == 1
        assert count_markings(chain_one_one) == 5
        assert count_markings(cherry) == 3

    def test_oracle_agrees(self, chain_two_one, chain_one_one, cherry):
        """Test the labeled-extension oracle gives the same counts"""
        for diagram in (chain_two_one, chain_one_one, cherry):
            assert count_markings_oracle(diagram) == count_markings(diagram)

    def test_oracle_size_limit(self, rect5):
        """Test the oracle refuses large posets"""
        big = enumerate_diagrams(rect5, max_codegree=0)[0]
        with pytest.raises(DomainError):
            count_markings_oracle(big)


class TestRefinedMultiplicities:
    """Test summed refined multiplicities of single diagrams"""

    def test_unpaired(self, chain_two_one):
        """Test S empty gives [2]^2 for the weight 2-1 chain"""
        assert sum_multiplicities(chain_two_one, Pairing()) == BRACKET_TWO_SQUARED
        assert multiplicity_tilde(chain_two_one, Pairing()) == TPoly((1, 2, 1))

    def test_paired_sources(self, chain_two_one, chain_one_one):
        """Test pairing the first two positions"""
        S = default_pairing(1)
        assert sum_multiplicities(chain_two_one, S) == BRACKET_TWO_SQUARED
        assert sum_multiplicities(chain_one_one, S) == 3

    def test_truncated(self, chain_two_one):
        """Test the limit keeps only the leading coefficients"""
        assert multiplicity_tilde(chain_two_one, Pairing(), limit=2) == TPoly((1, 2))

    def test_pair_shapes(self, cherry):
        """Test floor-edge and edge-edge adjacency"""
        assert pair_shape(cherry, ("floor", 0), ("edge", 0)) == "floor-edge"
        assert pair_shape(cherry, ("edge", 0), ("edge", 1)) == "edge-edge"
        assert pair_shape(cherry, ("source", 0), ("source", 0)) == "edge-edge"
        assert pair_shape(cherry, ("floor", 1), ("edge", 1)) is None
        assert pair_shape(cherry, ("floor", 0), ("floor", 1)) is None

    @pytest.mark.parametrize("polygon", [
        [[0, 0], [3, 0], [0, 3]],
        [[0, 0], [1, 0], [3, 1], [3, 2], [2, 3], [1, 3], [0, 2]],
        [[0, 0], [3, 0], [3, 1], [2, 2], [0, 2]],
        [[0, 0], [2, 0], [2, 2], [0, 2]],
    ])
    def test_oracle_agrees(self, polygon):
        """Test the memoized sums against the oracle for several pairings"""
        d = h_transverse_data(parse_polygon(polygon))
        pairings = [Pairing(), default_pairing(1), Pairing(pairs=((2, 3),)), default_pairing(2)]
        for c in enumerate_diagrams(d):
            assert count_markings_oracle(c) == count_markings(c)
            for S in pairings:
                assert sum_multiplicities_oracle(c, S) == sum_multiplicities(c, S)


class TestRefinedInvariant:
    """Test G_Delta(s) on the reference polygons"""

    def test_triangle(self, delta1):
        """Test G(0) = q + 10 + q^-1"""
        assert refined_invariant(delta1, 0) == Q_PLUS_TEN

    def test_triangle_one_pair(self, delta1):
        """Test G(1) = q + 8 + q^-1 for the default and a later pair"""
        assert refined_invariant(delta1, 1) == Q_PLUS_EIGHT
        assert refined_invariant(delta1, 1, [[5, 6]]) == Q_PLUS_EIGHT

    def test_unit_square(self, unit_square):
        """Test the unit square has G = 1"""
        assert refined_invariant(unit_square, 0) == 1

    def test_welschinger(self, delta1):
        """Test q = 1 and q = -1 without pairs and with one pair"""
        assert welschinger_specialization(delta1, 0) == (12, 8)
        assert welschinger_specialization(delta1, 1) == (10, 6)

    def test_result_record(self, delta1):
        """Test the JSON-ready result"""
        result = invariant_result(delta1, 0)
        assert result.degree == 1
        assert result.coefficients_by_codegree == [1, 10, 1]
        assert result.G == Q_PLUS_TEN.to_json()
        assert result.pairing == []

    def test_heptagon_structure(self, delta2):
        """Test degree, palindromy and positivity of the heptagon invariant"""
        for s in (0, 1):
            G = refined_invariant(delta2, s)
            assert G.degree == delta2.interior
            assert G.is_palindromic()
            assert all(c > 0 for _, c in G.items())

    @pytest.mark.parametrize("pairs", [[[1, 2]], [[3, 4]], [[4, 5]], [[6, 7]]])
    def test_pairing_independence(self, delta2, pairs):
        """Test G(1) does not depend on which consecutive pair is chosen"""
        assert refined_invariant(delta2, 1, pairs) == refined_invariant(delta2, 1)

    def test_pairing_independence_triangle(self, delta1):
        """Test every order-2 pairing of the triangle gives the same G"""
        reference = refined_invariant(delta1, 2)
        for pairs in ([[1, 2], [4, 5]], [[2, 3], [6, 7]], [[3, 4], [7, 8]]):
            assert refined_invariant(delta1, 2, pairs) == reference

    def test_threads_do_not_change_result(self, delta2):
        """Test the thread pool and the serial loop agree"""
        assert refined_invariant(delta2, 1, threads=4) == refined_invariant(delta2, 1, threads=1)

    def test_map_classes_order(self, delta1):
        """Test results come back in class order"""
        classes = enumerate_diagrams(delta1)
        assert map_classes(lambda c: c.codegree, classes, threads=3) == [0, 1, 1]

    def test_coefficient_matches_full_invariant(self, delta2):
        """Test <G>_i from bounded enumeration equals the tilde coefficient"""
        G = refined_invariant(delta2, 1)
        for i in range(delta2.interior + 1):
            assert invariant_coeff(delta2, 1, i) == tilde(G).coeff(i)

    def test_toolkit(self, delta1):
        """Test the facade reuses one enumeration"""
        toolkit = InvariantToolkit(delta1)
        assert toolkit.refined(0) == Q_PLUS_TEN
        assert toolkit.refined(0) is toolkit.refined(0)
        assert toolkit.coefficient(0, 1) == 10
        assert toolkit.welschinger(1) == (10, 6)
        assert sorted(count for _, count in toolkit.markings()) == [1, 3, 5]
        assert toolkit.tilde_identity(1).equal


class TestStarInvariant:
    """Test G*_Delta(S) and the tilde identity"""

    def test_triangle(self, delta1):
        """Test G* = (1-t^2)^2 (1-t)^5 + 8 t (1-t)^7"""
        one_minus_t = t_factor(1)
        expected = t_factor(2) ** 2 * one_minus_t ** 5 + TPoly.monomial(1, 8) * one_minus_t ** 7
        assert star_invariant(delta1, 0) == expected

    def test_paired_diagram(self, chain_one_one):
        """Test the codegree shift and the paired-source factor"""
        expected = TPoly.monomial(1, 3) * t_factor(2) * t_factor(1) ** 5
        assert star_multiplicities(chain_one_one, default_pairing(1), 1) == expected

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_one_floor_rectangle(self, n):
        """Test an n x 1 rectangle gives (1-t)^(2n)"""
        d = h_transverse_data(rectangle(n, 1))
        assert star_invariant(d, 0) == t_factor(1) ** (2 * n)

    def test_truncated(self, delta1):
        """Test order keeps only the low coefficients"""
        full = star_invariant(delta1, 0)
        assert star_invariant(delta1, 0, order=2) == full.truncate(2)

    def test_triangle_identity(self, delta1):
        """Test the identity for the triangle at s = 0 and s = 1"""
        report = tilde_identity_check(delta1, 0)
        assert report.equal
        assert report.tilde_G == [1, 10]
        assert tilde_identity_check(delta1, 1).equal

    def test_identity_on_corpus(self):
        """Test tilde(G) = A0^s A1^(y-2-2s) G* on small polygons and orders"""
        for vertices in tilde_corpus():
            d = h_transverse_data(parse_polygon(vertices))
            for s in range(min(d.s_max, 2) + 1):
                report = tilde_identity_check(d, s)
                assert report.equal, (vertices, s, report.tilde_G, report.product)

    def test_identity_with_explicit_pairing(self, delta2):
        """Test the identity for a pairing away from the default"""
        assert tilde_identity_check(delta2, 1, [[4, 5]]).equal


class TestUniversality:
    """Test coefficients against P_i and Q_i"""

    def test_triangle_first_coefficient(self, delta1):
        """Test <G>_1 = 10 = P_1(9, 3, 0)"""
        assert invariant_coeff(delta1, 0, 1) == 10
        assert universal_value(delta1, 0, 1) == ("P", "y + chi - 2*s - 2", 10)

    def test_verify_outside_hypotheses(self, delta1):
        """Test a report whose hypotheses fail is still consistent"""
        report = verify_universal(delta1, 0, 1)
        assert report.equal
        assert not report.hypotheses_hold
        assert report.theorem == "cp2"
        assert report.consistent

    def test_singular_polygon_uses_Q(self, delta2):
        """Test polygons with a singular vertex are compared with Q_i"""
        name, _, _ = universal_value(delta2, 0, 1)
        assert name == "Q"

    def test_star_check_not_applicable(self, delta1):
        """Test nothing is compared when the hypotheses fail at i = 0"""
        report = verify_star(delta1, 0)
        assert not report.applicable
        assert report.i_m == -1

    def test_square_codegree_zero(self, rect5):
        """Test <G>_0 = 1 for the 5x5 square"""
        assert invariant_coeff(rect5, 0, 0) == 1

    @pytest.mark.slow
    @pytest.mark.parametrize("s", [0, 1, 2])
    def test_square_first_coefficient(self, rect7, s):
        """Test <G>_1 = 30 - 2s = P_1(28, 4, s) with hypotheses satisfied"""
        report = verify_universal(rect7, s, 1)
        assert report.enumerated == 30 - 2 * s
        assert report.universal == 30 - 2 * s
        assert report.hypotheses_hold
        assert report.consistent

    @pytest.mark.slow
    def test_square_codegree_counts(self, rect7):
        """Test |C_0| = 1, |C_1| = 3 and <G>_0 = 1"""
        assert len(enumerate_diagrams(rect7, max_codegree=0)) == 1
        assert len(enumerate_diagrams(rect7, max_codegree=1)) == 3
        assert invariant_coeff(rect7, 0, 0) == 1

    @pytest.mark.slow
    def test_square_star_check(self, rect7):
        """Test G* starts like the star series below t^i_m"""
        report = verify_star(rect7, 0)
        assert report.applicable
        assert report.i_m == 1
        assert report.star == report.universal == [1]

    @pytest.mark.slow
    def test_trapezoid_first_coefficient(self, trapezoid):
        """Test <G>_1 = Q_1 = 80 on a polygon with an index-2 vertex"""
        report = verify_universal(trapezoid, 0, 1)
        assert report.polynomial == "Q"
        assert report.universal == 80
        assert report.enumerated == 80


class TestBlowup:
    """Test |C_i| of a corner cut against the original"""

    @pytest.mark.slow
    def test_square_blowup(self):
        """Test 4 = 3 + 1 for the 7x7 square with b=1, m=1, i=1"""
        report = blowup_cardinality_check(rectangle(7, 7), 1, 1, 1)
        assert report.lhs == 4
        assert report.rhs == 4
        assert report.equal
        assert [(t.k, t.partitions, t.classes) for t in report.terms] == [(0, 1, 3), (1, 1, 1)]
        assert not report.hypotheses_hold

    def test_accepts_polygon_data(self, delta1):
        """Test polygon data is accepted in place of a polygon"""
        report = blowup_cardinality_check(delta1, 1, 1, 0)
        assert report.blown_up == [[0, 0], [2, 0], [2, 1], [0, 3]]
        assert report.terms[0].k == 0

    def test_toolkit_blowup(self):
        """Test the facade forwards to the check"""
        toolkit = InvariantToolkit(h_transverse_data(cp2_triangle(4)))
        report = toolkit.blowup(1, 1, 0)
        assert report.i == 0
        assert report.lhs >= 1


pytestmark = pytest.mark.invariants
