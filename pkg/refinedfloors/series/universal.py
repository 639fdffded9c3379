"""Base series and the universal polynomials P_i, Q_i"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple, Union

from combinat import partitions
from config import get_universal_ring
from errors import MissingVariable, NonIntegerResult
from .truncated_series import TruncatedSeries

logger = logging.getLogger(__name__)

SMOOTH_VARIABLES = ("y", "chi", "s")
CP2_VARIABLES = ("d", "s")


def singular_variables(i: int) -> Tuple[str, ...]:
    """y, s, n_1 ... n_max(i,1)"""
    return ("y", "s") + tuple(f"n_{k}" for k in range(1, max(i, 1) + 1))


# ═══════════════════════════════════════════════════════════
# BASE SERIES
# ═══════════════════════════════════════════════════════════

def base_series(which: str, order: int, k: int = 1) -> TruncatedSeries:
    """
    One of the building blocks over QQ.

    Args:
        which: "A0" (1/(1-x^2)), "A1" (1/(1-x)), "A2" (partition series) or "A2_k"
        order: Truncation order
        k: Substitution x -> x^k for "A2_k"

    Returns:
        TruncatedSeries over QQ
    """
    if which == "A0":
        return TruncatedSeries.geometric(2, order)
    if which == "A1":
        return TruncatedSeries.geometric(1, order)
    if which == "A2":
        return TruncatedSeries([partitions(j) for j in range(order + 1)], order)
    if which == "A2_k":
        if k < 1:
            raise ValueError(f"A2_k needs k >= 1, got {k}")
        return base_series("A2", order).substitute_power(k)
    raise ValueError(f"unknown base series {which!r}")


# ═══════════════════════════════════════════════════════════
# SYMBOLIC UNIVERSAL SERIES
# ═══════════════════════════════════════════════════════════

def _symbolic_product(ring, order: int, factors: List[Tuple[TruncatedSeries, object]]) -> TruncatedSeries:
    """prod base ** exponent via one exp of the summed logarithms."""
    total = TruncatedSeries([], order, ring)
    for base, exponent in factors:
        total = total + base.log().to_ring(ring) * exponent
    return total.exp()


@lru_cache(maxsize=None)
def universal_P(i: int) -> List:
    """
    P_0 ... P_i, the coefficients of A0^s A1^(y-2-2s) A2^chi.

    Returns:
        List of sympy PolyElements in the ring QQ[y, chi, s]
    """
    ring = get_universal_ring(SMOOTH_VARIABLES)
    y, chi, s = ring.gens
    series = _symbolic_product(ring, i, [
        (base_series("A0", i), s),
        (base_series("A1", i), y - 2 - 2 * s),
        (base_series("A2", i), chi),
    ])
    logger.debug(f"[universal_P] computed P_0..P_{i}")
    return list(series.coeffs)


@lru_cache(maxsize=None)
def universal_Q(i: int) -> List:
    """
    Q_0 ... Q_i, the coefficients of A0^s A1^(y-2-2s) prod_k A2(x^k)^(n_k).

    Only k <= i contributes below order i+1.
    """
    ring = get_universal_ring(singular_variables(i))
    y, s, *ns = ring.gens
    factors = [
        (base_series("A0", i), s),
        (base_series("A1", i), y - 2 - 2 * s),
    ]
    for k, n_k in enumerate(ns, start=1):
        factors.append((base_series("A2_k", i, k), n_k))
    series = _symbolic_product(ring, i, factors)
    logger.debug(f"[universal_Q] computed Q_0..Q_{i}")
    return list(series.coeffs)


@lru_cache(maxsize=None)
def universal_P_star(i: int) -> List:
    """Coefficients of A2^chi, in QQ[chi]."""
    ring = get_universal_ring(("chi",))
    (chi,) = ring.gens
    return list(base_series("A2", i).pow_symbolic(chi, ring).coeffs)


@lru_cache(maxsize=None)
def universal_Q_star(i: int) -> List:
    """Coefficients of prod_k A2(x^k)^(n_k), in QQ[n_1, ..., n_max(i,1)]."""
    ring = get_universal_ring(tuple(f"n_{k}" for k in range(1, max(i, 1) + 1)))
    factors = [(base_series("A2_k", i, k), n_k) for k, n_k in enumerate(ring.gens, start=1)]
    return list(_symbolic_product(ring, i, factors).coeffs)


@lru_cache(maxsize=None)
def cp2_specialization(i: int) -> List:
    """P_0 ... P_i at y = 3d, chi = 3, as polynomials in QQ[d, s]."""
    ring = get_universal_ring(CP2_VARIABLES)
    d, s = ring.gens
    series = _symbolic_product(ring, i, [
        (base_series("A0", i), s),
        (base_series("A1", i), 3 * d - 2 - 2 * s),
        (base_series("A2", i), ring(3)),
    ])
    return list(series.coeffs)


# ═══════════════════════════════════════════════════════════
# NUMERIC UNIVERSAL SERIES
# ═══════════════════════════════════════════════════════════

def universal_series_numeric(y: int, chi: int, s: int, order: int) -> List[int]:
    """Coefficients of A0^s A1^(y-2-2s) A2^chi for integer exponents."""
    series = (
        base_series("A0", order).pow_int(s)
        * base_series("A1", order).pow_int(y - 2 - 2 * s)
        * base_series("A2", order).pow_int(chi)
    )
    return series.to_ints()


def singular_star_numeric(n: Mapping[int, int], order: int) -> List[int]:
    """Coefficients of prod_k A2(x^k)^(n_k)."""
    series = TruncatedSeries.one(order)
    for k, count in sorted(n.items()):
        if count and k <= order:
            series = series * base_series("A2_k", order, k).pow_int(count)
    return series.to_ints()


def universal_singular_numeric(y: int, s: int, n: Mapping[int, int], order: int) -> List[int]:
    """Coefficients of A0^s A1^(y-2-2s) prod_k A2(x^k)^(n_k)."""
    series = (
        base_series("A0", order).pow_int(s)
        * base_series("A1", order).pow_int(y - 2 - 2 * s)
        * TruncatedSeries(singular_star_numeric(n, order), order)
    )
    return series.to_ints()


# ═══════════════════════════════════════════════════════════
# EVALUATION AND OUTPUT
# ═══════════════════════════════════════════════════════════

def variable_names(poly) -> Tuple[str, ...]:
    return tuple(str(sym) for sym in poly.ring.symbols)


def eval_universal(poly, assignment: Mapping[str, int], require_integer: bool = True) -> Union[int, Fraction]:
    """
    Evaluate a polynomial exactly.

    Args:
        poly: sympy PolyElement
        assignment: Value for every variable of the polynomial's ring
        require_integer: Raise if the value is not an integer

    Returns:
        int when the value is integral, else Fraction

    Raises:
        MissingVariable: a ring variable has no value
        NonIntegerResult: require_integer and the value is fractional
    """
    names = variable_names(poly)
    missing = [name for name in names if name not in assignment]
    if missing:
        raise MissingVariable(f"no value for {', '.join(missing)}")

    value = poly.ring.domain.to_sympy(poly(*(assignment[name] for name in names)))
    if value.q == 1:
        return int(value.p)
    if require_integer:
        raise NonIntegerResult(f"{format_poly(poly)} evaluates to {value} at {dict(assignment)}")
    return Fraction(int(value.p), int(value.q))


def format_poly(poly) -> str:
    """
    Deterministic human-readable form in the ring's graded-lex order.

    Example: 'y + chi - 2*s - 2'
    """
    return str(poly)


def poly_to_json(poly) -> List[Dict]:
    """[{"exponents": {...}, "coeff": "p/q"}, ...] in ring order."""
    names = variable_names(poly)
    domain = poly.ring.domain
    out = []
    for exponents, coeff in poly.terms():
        c = domain.to_sympy(coeff)
        out.append({
            "exponents": {name: e for name, e in zip(names, exponents)},
            "coeff": f"{c.p}/{c.q}",
        })
    return out


def to_ring(poly, variables: Tuple[str, ...]):
    """
    Re-embed a polynomial into the shared ring on `variables`, matching by name.

    Raises:
        MissingVariable: the polynomial uses a variable outside `variables`
    """
    target = get_universal_ring(tuple(variables))
    source_names = variable_names(poly)
    terms = {}
    for exps, c in poly.terms():
        by_name = dict(zip(source_names, exps))
        if any(e and name not in variables for name, e in by_name.items()):
            raise MissingVariable(f"{format_poly(poly)} uses variables outside {tuple(variables)}")
        terms[tuple(by_name.get(name, 0) for name in variables)] = c
    return target.from_dict(terms)
