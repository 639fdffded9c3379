"""Property suites behind the `lemmas` subcommand"""
import logging
import random
from collections import Counter
from itertools import product
from math import prod
from typing import Callable, List, Optional, Tuple

from pydantic import BaseModel, Field

from combinat import (
    brute_F, enumerate_B, enumerate_decompositions, multinomial, n_series, partitions, phi,
    phi_series,
)
from config import OPERATION_SUITE_SEED, OPERATION_SUITE_SIZE
from diagrams import FloorDiagram, applicable_operations, apply_operation, enumerate_diagrams
from polygon import cp2_triangle, h_transverse_data, parse_polygon, rectangle
from qpoly import codeg_coeff, qint_sq
from series import base_series

logger = logging.getLogger(__name__)

MAX_FAILURES_REPORTED = 5


class LemmaResult(BaseModel):
    """Outcome of one property suite"""
    name: str
    passed: bool
    checked: int = Field(description="Number of individual cases evaluated")
    failures: List[str] = Field(default_factory=list, description="First few failing cases")


def _run(name: str, cases: List[Tuple[str, Callable[[], bool]]]) -> LemmaResult:
    failures = []
    for label, check in cases:
        if not check():
            failures.append(label)
    if failures:
        logger.error(f"[lemmas] {name}: {len(failures)} of {len(cases)} cases failed")
    return LemmaResult(
        name=name, passed=not failures, checked=len(cases), failures=failures[:MAX_FAILURES_REPORTED],
    )


def partition_count_suite(max_i: int = 12) -> LemmaResult:
    """|B_i| = p(i)"""
    return _run("codegree-vectors-count", [
        (f"i={i}", lambda i=i: len(enumerate_B(i)) == partitions(i))
        for i in range(max_i + 1)
    ])


def phi_suite(bound: int = 6) -> LemmaResult:
    """Phi_ell(k) = C(2k+ell-1, ell) = F(k, k+ell)"""
    return _run("phi-closed-form", [
        (f"k={k} ell={ell}", lambda k=k, ell=ell: phi(ell, k) == brute_F(k, k + ell))
        for k in range(bound + 1) for ell in range(bound + 1)
    ])


def phi_series_suite(max_k: int = 4, order: int = 8) -> LemmaResult:
    """sum_ell Phi_ell(k) x^ell = A1^(2k)"""
    return _run("phi-generating-series", [
        (f"k={k}", lambda k=k: phi_series(k, order) == base_series("A1", order).pow_int(2 * k).to_ints())
        for k in range(max_k + 1)
    ])


def bracket_suite(max_k: int = 4, max_i: int = 4) -> LemmaResult:
    """<prod_j [a_j]^2>_i = Phi_i(k) whenever every a_j > i"""
    cases = []
    for i in range(max_i + 1):
        for k in range(max_k + 1):
            for weights in product(range(i + 1, i + 4), repeat=k):
                def check(i=i, k=k, weights=weights) -> bool:
                    value = prod((qint_sq(a) for a in weights), start=qint_sq(1))
                    return codeg_coeff(value, i) == phi(i, k)
                cases.append((f"i={i} a={weights}", check))
    return _run("bracket-coefficients", cases)


def n_series_suite(max_ap: int = 6, max_s: int = 3, order: int = 6) -> LemmaResult:
    """sum over S of C(s, S) N(a, p, S) = A0^s A1^a A2^p"""
    length = order // 2 + 1
    cases = []
    for a in range(max_ap + 1):
        for p in range(max_ap + 1):
            for s in range(max_s + 1):
                def check(a=a, p=p, s=s) -> bool:
                    total = [0] * (order + 1)
                    for S in enumerate_decompositions(s, length):
                        weight = multinomial(s, S)
                        for j, c in enumerate(n_series(a, p, S, order)):
                            total[j] += weight * c
                    expected = (
                        base_series("A0", order).pow_int(s)
                        * base_series("A1", order).pow_int(a)
                        * base_series("A2", order).pow_int(p)
                    ).to_ints()
                    return total == expected
                cases.append((f"a={a} p={p} s={s}", check))
    return _run("n-series-identity", cases)


def operation_corpus() -> List[FloorDiagram]:
    """Every diagram of a few small polygons, the starting points of the randomized moves."""
    polygons = [
        cp2_triangle(3),
        cp2_triangle(4),
        rectangle(3, 3),
        rectangle(4, 2),
        parse_polygon([[0, 0], [3, 0], [3, 1], [2, 2], [0, 2]]),
    ]
    corpus = []
    for polygon in polygons:
        corpus.extend(c.diagram for c in enumerate_diagrams(h_transverse_data(polygon)))
    return corpus


def _move_preserves(before: FloorDiagram, after: FloorDiagram, drop: int) -> bool:
    return (
        after.is_tree()
        and after.satisfies_divergence()
        and Counter(after.ell_multiset()) == Counter(before.ell_multiset())
        and Counter(after.r_multiset()) == Counter(before.r_multiset())
        and after.total_sources() == before.total_sources()
        and after.total_sinks() == before.total_sinks()
        and after.degree - before.degree == drop
    )


def operation_suite(size: int = OPERATION_SUITE_SIZE, seed: int = OPERATION_SUITE_SEED,
                    corpus: Optional[List[FloorDiagram]] = None) -> LemmaResult:
    """Each move keeps the diagram valid and lowers the codegree by its announced amount."""
    rng = random.Random(seed)
    movable = [d for d in (corpus or operation_corpus()) if applicable_operations(d)]
    cases = []
    for n in range(size):
        before = rng.choice(movable)
        move = rng.choice(applicable_operations(before))
        after = apply_operation(before, move)
        cases.append((f"#{n} {move.name} e1={move.e1}", lambda b=before, a=after, m=move: _move_preserves(b, a, m.drop)))
    return _run("operation-codegree-drops", cases)


def run_lemma_suite(max_i: int = 12) -> List[LemmaResult]:
    """
    Run every property suite.

    Args:
        max_i: Bound for the partition count suite; the others use fixed ranges

    Returns:
        One LemmaResult per suite, in a fixed order
    """
    results = [
        partition_count_suite(max_i),
        phi_suite(),
        phi_series_suite(),
        bracket_suite(),
        n_series_suite(),
        operation_suite(),
    ]
    logger.info(f"[lemmas] {sum(r.passed for r in results)}/{len(results)} suites passed")
    return results
