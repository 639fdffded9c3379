"""
Unit tests for truncated series and the universal polynomials.

Tests cover:
- Base series A0, A1, A2 and A2(x^k)
- Inverse, log, exp and symbolic powers
- P_i against numeric expansions and known closed forms
- Q_i, the star series and exact evaluation
"""
from math import factorial

import pytest
from sympy import Symbol, sympify
from sympy.polys.domains import QQ

from config import get_universal_ring
from errors import ConstantTermNotOne, MissingVariable, NonIntegerResult
from series import (
    CP2_VARIABLES, SMOOTH_VARIABLES, TruncatedSeries, base_series, cp2_specialization,
    eval_universal, format_poly, poly_to_json, series_from_ints, singular_star_numeric,
    singular_variables, universal_P, universal_P_star, universal_Q, universal_series_numeric,
    universal_singular_numeric, variable_names,
)


@pytest.fixture
def smooth_ring():
    """QQ[y, chi, s] shared by every P_i"""
    return get_universal_ring(SMOOTH_VARIABLES)


class TestBaseSeries:
    """Test the building blocks"""

    def test_partition_series(self):
        """Test A2 lists p(n)"""
        assert base_series("A2", 5).to_ints() == [1, 1, 2, 3, 5, 7]

    def test_even_geometric(self):
        """Test A0 = 1/(1-x^2)"""
        assert base_series("A0", 4).to_ints() == [1, 0, 1, 0, 1]

    def test_geometric(self):
        """Test A1 = 1/(1-x)"""
        assert base_series("A1", 3).to_ints() == [1, 1, 1, 1]

    def test_substituted_partition_series(self):
        """Test A2(x^2)"""
        assert base_series("A2_k", 4, 2).to_ints() == [1, 0, 1, 0, 2]

    def test_unknown_series(self):
        """Test an unknown name raises ValueError"""
        with pytest.raises(ValueError):
            base_series("A3", 2)


class TestTruncatedSeries:
    """Test series arithmetic"""

    def test_inverse_of_geometric(self):
        """Test 1/A1 = 1 - x"""
        assert base_series("A1", 4).inverse().to_ints() == [1, -1, 0, 0, 0]

    def test_negative_power(self):
        """Test A1^-2 = (1-x)^2"""
        assert base_series("A1", 3).pow_int(-2).to_ints() == [1, -2, 1, 0]

    def test_log_exp_round_trip(self):
        """Test exp(log(A2)) = A2"""
        a2 = base_series("A2", 6)
        assert a2.log().exp() == a2

    def test_log_needs_constant_one(self):
        """Test log of 2 + x raises ConstantTermNotOne"""
        with pytest.raises(ConstantTermNotOne):
            series_from_ints([2, 1]).log()

    def test_orders_must_match(self):
        """Test adding series of different orders raises"""
        with pytest.raises(ValueError):
            base_series("A1", 2) + base_series("A1", 3)

    def test_symbolic_power_of_geometric(self):
        """Test A1^n = 1 + n x + n(n+1)/2 x^2"""
        ring = get_universal_ring(("n",))
        (n,) = ring.gens
        coeffs = base_series("A1", 2).pow_symbolic(n, ring).coeffs
        assert coeffs[0] == ring.one
        assert coeffs[1] == n
        assert 2 * coeffs[2] == n ** 2 + n

    def test_series_from_ints(self):
        """Test the default order is the last index"""
        series = series_from_ints([1, 2, 3])
        assert series.order == 2
        assert series[1] == QQ(2)
        assert series[7] == QQ(0)


class TestUniversalP:
    """Test P_i(y, chi, s)"""

    def test_first_polynomials(self, smooth_ring):
        """Test P_0 = 1 and P_1 = y + chi - 2s - 2"""
        y, chi, s = smooth_ring.gens
        P = universal_P(1)
        assert P[0] == smooth_ring.one
        assert P[1] == y + chi - 2 * s - 2
        assert format_poly(P[1]) == "y + chi - 2*s - 2"

    def test_second_polynomial(self, smooth_ring):
        """Test 2 P_2 against the hand expansion with m = y - 2 - 2s"""
        y, chi, s = smooth_ring.gens
        m = y - 2 - 2 * s
        expected = 2 * s + m * (m + 1) + 2 * m * chi + 4 * chi + chi * (chi - 1)
        assert 2 * universal_P(2)[2] == expected

    @pytest.mark.parametrize("y,chi,s", [(9, 3, 0), (9, 3, 2), (28, 4, 1), (14, 6, 3), (5, 5, 0)])
    def test_matches_numeric_expansion(self, y, chi, s):
        """Test P_k at integer points equals the expanded product"""
        numeric = universal_series_numeric(y, chi, s, 4)
        for k, poly in enumerate(universal_P(4)):
            assert eval_universal(poly, {"y": y, "chi": chi, "s": s}) == numeric[k]

    def test_triangle_value(self):
        """Test P_1(9, 3, 0) = 10"""
        assert eval_universal(universal_P(1)[1], {"y": 9, "chi": 3, "s": 0}) == 10

    def test_integer_valued(self):
        """Test k! P_k has integer coefficients"""
        for k, poly in enumerate(universal_P(4)):
            for _, coeff in poly.terms():
                assert (coeff * factorial(k)).denominator == 1

    def test_json_terms(self):
        """Test poly_to_json lists exponents by name and rational coefficients"""
        terms = poly_to_json(universal_P(1)[1])
        assert {"exponents": {"y": 1, "chi": 0, "s": 0}, "coeff": "1/1"} in terms
        assert {"exponents": {"y": 0, "chi": 0, "s": 1}, "coeff": "-2/1"} in terms


class TestProjectivePlane:
    """Test P_i(3d, 3, s)"""

    def test_first_coefficient(self):
        """Test P_1(3d, 3, s) = 3d - 2s + 1"""
        d, s = get_universal_ring(CP2_VARIABLES).gens
        assert cp2_specialization(1)[1] == 3 * d - 2 * s + 1

    def test_second_coefficient(self):
        """Test 2 P_2(3d, 3, s) = 9d^2 - 12ds + 4s^2 + 9d - 4s + 8"""
        d, s = get_universal_ring(CP2_VARIABLES).gens
        expected = 9 * d ** 2 - 12 * d * s + 4 * s ** 2 + 9 * d - 4 * s + 8
        assert 2 * cp2_specialization(2)[2] == expected

    def test_agrees_with_general_polynomial(self):
        """Test the specialization matches P_3 evaluated at y = 3d, chi = 3"""
        for degree in (4, 7, 10):
            for s in range(3):
                general = eval_universal(universal_P(3)[3], {"y": 3 * degree, "chi": 3, "s": s})
                special = eval_universal(cp2_specialization(3)[3], {"d": degree, "s": s})
                assert general == special


class TestUniversalQ:
    """Test Q_i(y, s, n_1, ...) and the star series"""

    def test_variables(self):
        """Test the variable tuple grows with i"""
        assert singular_variables(0) == ("y", "s", "n_1")
        assert singular_variables(3) == ("y", "s", "n_1", "n_2", "n_3")

    def test_first_polynomial(self):
        """Test Q_1 = y + n_1 - 2s - 2"""
        ring = get_universal_ring(singular_variables(1))
        y, s, n_1 = ring.gens
        assert universal_Q(1)[1] == y + n_1 - 2 * s - 2

    def test_trapezoid_value(self):
        """Test Q_1 at y=78, n_1=4, s=0"""
        assert eval_universal(universal_Q(1)[1], {"y": 78, "s": 0, "n_1": 4}) == 80

    def test_reduces_to_P_for_smooth_polygons(self):
        """Test Q_i with n_1 = chi and no singular vertices equals P_i"""
        for k in range(4):
            p_value = eval_universal(universal_P(3)[k], {"y": 12, "chi": 5, "s": 1})
            q_value = eval_universal(
                universal_Q(3)[k], {"y": 12, "s": 1, "n_1": 5, "n_2": 0, "n_3": 0}
            )
            assert p_value == q_value

    def test_numeric_agrees(self):
        """Test Q_2 evaluated equals the numeric expansion"""
        n = {1: 4, 2: 1}
        numeric = universal_singular_numeric(78, 1, n, 2)
        value = eval_universal(universal_Q(2)[2], {"y": 78, "s": 1, "n_1": 4, "n_2": 1})
        assert value == numeric[2]

    def test_star_series(self):
        """Test prod_k A2(x^k)^n_k for small n"""
        assert singular_star_numeric({1: 3}, 2) == [1, 3, 9]
        assert singular_star_numeric({1: 0, 2: 1}, 4) == [1, 0, 1, 0, 2]

    def test_star_polynomial(self):
        """Test the chi-only star polynomial at chi = 3"""
        (chi,) = get_universal_ring(("chi",)).gens
        assert universal_P_star(1)[1] == chi


class TestEvaluation:
    """Test exact evaluation of universal polynomials"""

    def test_missing_variable(self):
        """Test an incomplete assignment raises MissingVariable"""
        with pytest.raises(MissingVariable):
            eval_universal(universal_P(1)[1], {"y": 9, "chi": 3})

    def test_non_integer_value(self, smooth_ring):
        """Test y/2 at y=3 raises unless fractions are allowed"""
        half_y = smooth_ring.from_dict({(1, 0, 0): QQ(1, 2)})
        with pytest.raises(NonIntegerResult):
            eval_universal(half_y, {"y": 3, "chi": 0, "s": 0})
        value = eval_universal(half_y, {"y": 3, "chi": 0, "s": 0}, require_integer=False)
        assert (value.numerator, value.denominator) == (3, 2)

    def test_format_parses_back_to_the_polynomial(self):
        """Test the printed form of P_2 reads back as the same expression"""
        poly = universal_P(2)[2]
        symbols = {name: Symbol(name) for name in variable_names(poly)}
        assert sympify(format_poly(poly), locals=symbols) == poly.as_expr()

    def test_agrees_with_expression_substitution(self):
        """Test exact evaluation matches substituting into the sympy expression"""
        poly = universal_P(2)[2]
        values = {"y": 28, "chi": 4, "s": 3}
        expr = poly.as_expr().subs({Symbol(k): v for k, v in values.items()})
        assert eval_universal(poly, values) == int(expr)


pytestmark = pytest.mark.series
