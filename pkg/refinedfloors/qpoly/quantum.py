"""Quantum integers, refined multiplicity factors and the tilde transform"""
from enum import Enum
from functools import lru_cache
from typing import Union

from errors import BadKind, HalfIntegerExponent, ZeroPolynomial
from .sym_laurent import SymLaurent
from .tpoly import TPoly


@lru_cache(maxsize=None)
def quantum_integer(n: int) -> SymLaurent:
    """
    [n] = q^((n-1)/2) + q^((n-3)/2) + ... + q^(-(n-1)/2).

    Args:
        n: Non-negative integer; [0] is the zero polynomial

    Returns:
        SymLaurent with n unit coefficients
    """
    if n < 0:
        raise ValueError(f"quantum integers need n >= 0, got {n}")
    return SymLaurent({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def qint_sq(n: int) -> SymLaurent:
    """[n]^2"""
    base = quantum_integer(n)
    return base * base


@lru_cache(maxsize=None)
def qint_q2(n: int) -> SymLaurent:
    """[n]_2 = [n](q^2), obtained by doubling every exponent."""
    return SymLaurent({2 * e: c for e, c in quantum_integer(n).items()})


@lru_cache(maxsize=None)
def pair_factor(w: int, w2: int) -> SymLaurent:
    """
    [w][w'][w+w'] / [2], the factor of two paired edges at one floor.

    Raises:
        InexactDivision: never for w, w' >= 1 (one of w, w', w+w' is even)
    """
    if w < 1 or w2 < 1:
        raise ValueError(f"pair_factor needs positive weights, got {w}, {w2}")
    product = quantum_integer(w) * quantum_integer(w2) * quantum_integer(w + w2)
    return product.exact_div(quantum_integer(2))


def codeg_coeff(p: SymLaurent, i: int) -> int:
    """
    Coefficient of codegree i, i.e. at q-degree deg(p) - i.

    Raises:
        ZeroPolynomial: p is zero
    """
    return p.coeff(p.degree_u - 2 * i)


def tilde(p: SymLaurent) -> TPoly:
    """
    t^deg(p) * p(t^-1) read as a polynomial in t: the t^i coefficient is <p>_i.

    Raises:
        ZeroPolynomial: p is zero
        HalfIntegerExponent: p mixes integer and half-integer q-exponents
    """
    if p.is_zero():
        raise ZeroPolynomial("tilde of the zero polynomial is undefined")
    top = p.degree_u
    coeffs = {}
    for e, c in p.items():
        gap = top - e
        if gap % 2:
            raise HalfIntegerExponent(f"{p} mixes integer and half-integer exponents")
        coeffs[gap // 2] = c
    return TPoly(coeffs.get(i, 0) for i in range(max(coeffs) + 1))


def from_tpoly(t: TPoly, degree_u: int) -> SymLaurent:
    """Inverse of tilde for a known top u-exponent."""
    return SymLaurent({degree_u - 2 * i: c for i, c in enumerate(t.coeffs)})


# ═══════════════════════════════════════════════════════════
# DENOMINATOR-FREE FACTORS
# ═══════════════════════════════════════════════════════════

class StarKind(str, Enum):
    """Classes of edges (and edge pairs) in the denominator-free multiplicity."""
    E0_BOUNDED = "E0-bounded"
    E0_INFINITE = "E0-infinite"
    E1_BOUNDED = "E1-bounded"
    E1_INFINITE = "E1-infinite"
    E2_BOUNDED_BOUNDED = "E2-bounded-bounded"
    E2_BOUNDED_INFINITE = "E2-bounded-infinite"
    E2_INFINITE_INFINITE = "E2-infinite-infinite"


@lru_cache(maxsize=None)
def t_factor(n: int) -> TPoly:
    """t_n = 1 - t^n"""
    return TPoly([1] + [0] * (n - 1) + [-1])


def star_factor(kind: Union[StarKind, str], w: int = 1, w2: int = 1) -> TPoly:
    """
    Factor contributed by one edge class, with t_n = 1 - t^n.

    Args:
        kind: StarKind or its string tag
        w: Weight of the (first) bounded edge
        w2: Weight of the second bounded edge for E2-bounded-bounded

    Raises:
        BadKind: unknown tag
    """
    try:
        kind = StarKind(kind)
    except ValueError:
        raise BadKind(f"unknown edge class {kind!r}")

    if kind == StarKind.E0_BOUNDED:
        return t_factor(w) * t_factor(w)
    if kind == StarKind.E0_INFINITE:
        return t_factor(1)
    if kind == StarKind.E1_BOUNDED:
        return t_factor(2 * w)
    if kind == StarKind.E1_INFINITE:
        return TPoly((1, 1))
    if kind == StarKind.E2_BOUNDED_BOUNDED:
        return t_factor(w) * t_factor(w2) * t_factor(w + w2)
    if kind == StarKind.E2_BOUNDED_INFINITE:
        return t_factor(w) * t_factor(w + 1)
    return t_factor(2)
