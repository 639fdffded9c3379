"""Binomials, multinomials, the nu products and the Phi numbers"""
import logging
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterator, List, Sequence, Tuple

from errors import SumMismatch
from .codeg_vectors import CodegVector, codeg, enumerate_C, sum_from

logger = logging.getLogger(__name__)

# S = (S_0, S_1, ...) with S_0 + S_1 + ... = s
Decomposition = Tuple[int, ...]


def binomial(n: int, r: int) -> int:
    """
    C(n, r) = n (n-1) ... (n-r+1) / r!, zero for r < 0.

    Negative n goes through the falling factorial, so C(-1, 0) = 1 and
    C(-1, 2) = 1.
    """
    if r < 0:
        return 0
    if n >= 0:
        return comb(n, r)
    return prod(range(n - r + 1, n + 1)) // factorial(r)


def multinomial(s: int, S: Sequence[int]) -> int:
    """
    s! / (S_0! S_1! ...).

    Raises:
        SumMismatch: the parts of S do not add up to s
    """
    if sum(S) != s or any(x < 0 for x in S):
        raise SumMismatch(f"decomposition {tuple(S)} does not sum to {s}")
    result = factorial(s)
    for x in S:
        result //= factorial(x)
    return result


def enumerate_decompositions(s: int, length: int) -> Iterator[Decomposition]:
    """
    Every (S_0, ..., S_{length-1}) of non-negative integers summing to s.

    Higher indices are cut off; callers pick length from their truncation order.
    """
    if length <= 0:
        if s == 0:
            yield ()
        return
    if length == 1:
        yield (s,)
        return
    for first in range(s, -1, -1):
        for rest in enumerate_decompositions(s - first, length - 1):
            yield (first,) + rest


def nu_product(a: int, p: int, u: CodegVector, S: Sequence[int]) -> int:
    """
    nu_{>=1}(a, p, u, S) = prod over n >= 1 of C(a + n p - sum_{n+1}(u - 2S), u_n - 2 S_n).

    u is indexed from 1, S from 0; S_0 never enters.
    """
    top = max(len(u), len(S) - 1, 0)
    v = [(u[j - 1] if j <= len(u) else 0) - 2 * (S[j] if j < len(S) else 0) for j in range(1, top + 1)]
    result = 1
    for n in range(1, top + 1):
        result *= binomial(a + n * p - sum_from(v, n + 1), v[n - 1])
        if result == 0:
            break
    return result


def n_series(a: int, p: int, S: Sequence[int], order: int) -> List[int]:
    """
    Coefficients x^0 .. x^order of the series sum over u of nu_{>=1}(a, p, u, S) x^codeg(u).
    """
    coeffs = [0] * (order + 1)
    for u in enumerate_C(order):
        coeffs[codeg(u)] += nu_product(a, p, u, S)
    return coeffs


@lru_cache(maxsize=None)
def phi(ell: int, k: int) -> int:
    """Phi_ell(k) = C(2k + ell - 1, ell), with Phi_0(0) = 1."""
    return binomial(2 * k + ell - 1, ell)


def phi_series(k: int, order: int) -> List[int]:
    """Phi_0(k), ..., Phi_order(k): the generating series of ell -> Phi_ell(k)."""
    return [phi(ell, k) for ell in range(order + 1)]


def brute_F(k: int, ell: int) -> int:
    """
    F(k, ell): sum over compositions ell = i_1 + ... + i_k (parts >= 1) of i_1 * ... * i_k.

    F(0, 0) = 1 for the empty composition.
    """
    if k == 0:
        return 1 if ell == 0 else 0
    if ell < k:
        return 0
    total = 0
    for parts in product(range(1, ell - k + 2), repeat=k):
        if sum(parts) == ell:
            total += prod(parts)
    return total
