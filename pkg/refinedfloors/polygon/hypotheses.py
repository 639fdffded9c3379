"""Hypothesis checks for the universality theorems"""
import logging
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from errors import DomainError
from .h_transverse import HTransverseData

logger = logging.getLogger(__name__)


class TheoremSelector(str, Enum):
    """Which set of sufficient conditions to test."""
    NONSINGULAR_TWO_RAYS = "nonsingular-two-rays"
    NONSINGULAR_ONE_RAY = "nonsingular-one-ray"
    SINGULAR_TWO_RAYS = "singular-two-rays"
    CP2 = "cp2"
    STAR = "star"


class InequalityCheck(BaseModel):
    """One condition of a hypothesis set"""
    name: str = Field(description="Human-readable condition, e.g. 'Δ > 6'")
    lhs: Optional[int] = Field(default=None, description="Left-hand value (None for structural checks)")
    rhs: Optional[int] = Field(default=None, description="Right-hand bound")
    holds: bool


class HypothesisReport(BaseModel):
    """Outcome of check_hypotheses"""
    theorem: TheoremSelector
    i: int
    s: int
    satisfied: bool
    failing: Optional[str] = Field(default=None, description="Name of the first failing condition")
    checks: List[InequalityCheck] = Field(default_factory=list)


def _gt(name: str, lhs: int, rhs: int) -> InequalityCheck:
    return InequalityCheck(name=f"{name} > {rhs}", lhs=lhs, rhs=rhs, holds=lhs > rhs)


def _structural(name: str, holds: bool) -> InequalityCheck:
    return InequalityCheck(name=name, holds=holds)


def is_cp2_triangle(d: HTransverseData) -> bool:
    """Smooth triangle with equal edge lengths, i.e. a multiple of the standard simplex up to congruence."""
    return d.chi == 3 and d.is_non_singular and len(set(d.edge_lengths)) == 1


def d_f_multiplier(d: HTransverseData) -> int:
    """a - floor(a/2) + 1, the coefficient of d_F in the edge bounds."""
    return d.a - d.a // 2 + 1


def check_hypotheses(d: HTransverseData, i: int, s: int, which: TheoremSelector) -> HypothesisReport:
    """
    Evaluate the sufficient conditions of one universality statement.

    "Δ > c" means every edge of the polygon has lattice length > c.

    Args:
        d: Polygon data
        i: Codegree
        s: Pairing order
        which: Theorem selector

    Returns:
        HypothesisReport listing each condition; failures are reported, never raised
    """
    if i < 0:
        raise DomainError(f"codegree must be non-negative, got {i}")
    if not 0 <= s <= d.s_max:
        raise DomainError(f"pairing order {s} outside 0..{d.s_max}")

    which = TheoremSelector(which)
    bound_dF = i + d_f_multiplier(d) * d.d_F
    edges = d.min_edge_length
    checks: List[InequalityCheck] = []

    if which == TheoremSelector.NONSINGULAR_TWO_RAYS:
        checks.append(_structural("non-singular fan", d.is_non_singular))
        checks.append(_structural("two vertical rays", d.vertical_ray_count == 2))
        checks.append(_gt("Δ", edges, 2 * (i + 2)))
        checks.append(_gt("e_top", d.e_top, bound_dF))
        checks.append(_gt("e_bot", d.e_bot, i + 2 * s))
        checks.append(_gt("e_bot", d.e_bot, bound_dF))

    elif which == TheoremSelector.NONSINGULAR_ONE_RAY:
        checks.append(_structural("non-singular fan", d.is_non_singular))
        checks.append(_structural("one vertical ray", d.vertical_ray_count == 1))
        e_ray = max(d.e_top, d.e_bot)
        checks.append(_gt("Δ", edges, 2 * (i + 2)))
        checks.append(_gt("a", d.a, i + 2 * s))
        checks.append(_gt("a", d.a, 5 * (i + 1) + 6))
        checks.append(_gt("e_ray", e_ray, i + 2 * s))
        checks.append(_gt("e_ray", e_ray, 5 * (i + 1) + 6))
        checks.append(_gt("e_ray", e_ray, bound_dF))

    elif which == TheoremSelector.SINGULAR_TWO_RAYS:
        checks.append(_structural("two vertical rays", d.vertical_ray_count == 2))
        checks.append(_gt("Δ", edges, 2 * (i + 2)))
        checks.append(_gt("e_bot", d.e_bot, bound_dF))
        checks.append(_gt("e_bot", d.e_bot, i + 2 * s))
        checks.append(_gt("e_top", d.e_top, bound_dF))

    elif which == TheoremSelector.CP2:
        checks.append(_structural("projective plane triangle", is_cp2_triangle(d)))
        checks.append(_gt("Δ", edges, 5 * (i + 1) + 6))
        checks.append(_gt("Δ", edges, i + 2 * s))

    elif which == TheoremSelector.STAR:
        checks.append(_gt("Δ", edges, 2 * (i + 2)))
        checks.append(_gt("e_bot", d.e_bot, i + 2 * s))
        checks.append(_gt("e_bot", d.e_bot, bound_dF))

    failing = next((c.name for c in checks if not c.holds), None)
    report = HypothesisReport(
        theorem=which, i=i, s=s, satisfied=failing is None, failing=failing, checks=checks
    )
    logger.debug(f"[check_hypotheses] {which.value} i={i} s={s} -> {report.satisfied} ({failing})")
    return report


def select_theorem(d: HTransverseData) -> Optional[TheoremSelector]:
    """
    Pick the statement that covers this polygon, if any.

    Returns:
        The selector, or None when no statement applies (e.g. no horizontal edge)
    """
    if d.is_non_singular:
        if d.vertical_ray_count == 2:
            return TheoremSelector.NONSINGULAR_TWO_RAYS
        if is_cp2_triangle(d):
            return TheoremSelector.CP2
        if d.vertical_ray_count == 1:
            return TheoremSelector.NONSINGULAR_ONE_RAY
        return None
    if d.vertical_ray_count == 2:
        return TheoremSelector.SINGULAR_TWO_RAYS
    return None


def max_valid_codegree(d: HTransverseData, s: int, which: TheoremSelector) -> int:
    """
    Largest i for which the selected conditions hold (-1 if they fail at i = 0).

    All conditions are monotone in i, so the first failure ends the scan.
    """
    i = 0
    while check_hypotheses(d, i, s, which).satisfied:
        i += 1
    return i - 1
