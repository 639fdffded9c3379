"""Partition counts and codegree vectors"""
from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

# u = (u_1, u_2, ...) with trailing zeros trimmed; u_j counts parts of size j
CodegVector = Tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> int:
    """
    Number of partitions p(n), by Euler's pentagonal recurrence.

    Args:
        n: Non-negative integer

    Returns:
        p(n), with p(0) = 1
    """
    if n < 0:
        return 0
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * table[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[n]


def codeg(u: Sequence[int]) -> int:
    """codeg(u) = sum of j * u_j (u indexed from 1)."""
    return sum(j * x for j, x in enumerate(u, start=1))


def codeg_from(u: Sequence[int], k: int) -> int:
    """codeg_k(u) = sum over j >= k of j * u_j."""
    return sum(j * x for j, x in enumerate(u, start=1) if j >= k)


def sum_from(u: Sequence[int], k: int) -> int:
    """sum_k(u) = sum over j >= k of u_j."""
    return sum(x for j, x in enumerate(u, start=1) if j >= k)


def _trim(values: List[int]) -> CodegVector:
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def enumerate_B(i: int) -> List[CodegVector]:
    """
    All vectors u with codeg(u) = i, one per partition of i.

    Returns:
        Sorted list of trimmed vectors; [()] for i = 0
    """
    if i == 0:
        return [()]
    vectors = []
    for parts in _sympy_partitions(i):
        # sympy reuses the dict between iterations
        values = [0] * i
        for size, count in parts.items():
            values[size - 1] = count
        vectors.append(_trim(values))
    return sorted(vectors)


def enumerate_C(i: int) -> List[CodegVector]:
    """All vectors with codeg(u) <= i, ordered by codegree then lexicographically."""
    out: List[CodegVector] = []
    for j in range(i + 1):
        out.extend(enumerate_B(j))
    return out
