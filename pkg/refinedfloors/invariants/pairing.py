"""Pairing - disjoint consecutive pairs of marking positions"""
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from errors import InvalidPairing


class Pairing(BaseModel):
    """A set of disjoint pairs {i, i+1} of marking positions (1-based)"""
    model_config = ConfigDict(frozen=True)

    pairs: Tuple[Tuple[int, int], ...] = Field(default=(), description="Sorted pairs (i, i+1)")

    @property
    def order(self) -> int:
        return len(self.pairs)

    def starts(self) -> frozenset:
        """First position of every pair."""
        return frozenset(i for i, _ in self.pairs)

    def to_json(self) -> List[List[int]]:
        return [[i, j] for i, j in self.pairs]


def default_pairing(s: int) -> Pairing:
    """{1,2}, {3,4}, ..., {2s-1, 2s}"""
    return Pairing(pairs=tuple((2 * j + 1, 2 * j + 2) for j in range(s)))


def validate_pairing(pairs: Sequence[Sequence[int]], n: int, s_max: int) -> Pairing:
    """
    Check and normalize an explicit pairing.

    Args:
        pairs: Iterable of [i, i+1]
        n: Number of marking positions
        s_max: Largest admissible order

    Returns:
        Pairing with pairs sorted

    Raises:
        InvalidPairing: a pair is not consecutive, leaves 1..n, overlaps another,
            or there are more than s_max pairs
    """
    normalized = []
    used = set()
    for pair in pairs:
        if len(pair) != 2:
            raise InvalidPairing(f"{list(pair)} is not a pair")
        i, j = sorted(int(x) for x in pair)
        if j != i + 1:
            raise InvalidPairing(f"pair {{{i},{j}}} is not consecutive")
        if i < 1 or j > n:
            raise InvalidPairing(f"pair {{{i},{j}}} leaves positions 1..{n}")
        if i in used or j in used:
            raise InvalidPairing(f"pair {{{i},{j}}} overlaps another pair")
        used.update((i, j))
        normalized.append((i, j))
    if len(normalized) > s_max:
        raise InvalidPairing(f"order {len(normalized)} exceeds s_max = {s_max}")
    return Pairing(pairs=tuple(sorted(normalized)))
