"""Assembly of G_Delta(s), G*_Delta(S) and their checks against the universal series"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar, Union

from combinat import partitions
from config import get_thread_count
from diagrams import DiagramClass, enumerate_diagrams
from errors import InvalidPairing, InvariantViolation
from polygon import (
    HTransverseData, LatticePolygon, TheoremSelector, blow_up_corner, check_hypotheses,
    h_transverse_data, max_valid_codegree, parse_polygon, select_theorem,
)
from qpoly import SymLaurent, TPoly, tilde
from series import (
    TruncatedSeries, base_series, eval_universal, format_poly, singular_star_numeric,
    universal_P, universal_Q,
)
from .marking_poset import multiplicity_tilde, star_multiplicities, sum_multiplicities
from .pairing import Pairing, default_pairing, validate_pairing
from .reports import (
    BlowupCardinalityReport, BlowupTerm, InvariantResult, StarCheckReport,
    TildeIdentityReport, VerificationReport,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

PairingLike = Union[Pairing, Sequence[Sequence[int]], None]


def map_classes(fn: Callable[[DiagramClass], T], classes: List[DiagramClass],
                threads: Optional[int] = None) -> List[T]:
    """Apply fn to every class, on a thread pool when more than one worker is configured."""
    workers = threads or get_thread_count()
    if workers <= 1 or len(classes) <= 1:
        return [fn(c) for c in classes]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, classes))


def resolve_pairing(d: HTransverseData, s: int, pairing: PairingLike = None) -> Pairing:
    """
    The pairing to use for order s: the default one, or a validated explicit one.

    Raises:
        InvalidPairing: s is out of range or the explicit pairing has another order
    """
    if s < 0 or s > d.s_max:
        raise InvalidPairing(f"order s = {s} outside 0..{d.s_max}")
    if pairing is None:
        pairs = default_pairing(s).pairs
    else:
        pairs = pairing.pairs if isinstance(pairing, Pairing) else pairing
    resolved = validate_pairing(pairs, d.y - 1, d.s_max)
    if resolved.order != s:
        raise InvalidPairing(f"pairing has order {resolved.order}, expected {s}")
    return resolved


def _sum(values, start):
    total = start
    for v in values:
        total = total + v
    return total


# ═══════════════════════════════════════════════════════════
# REFINED INVARIANT
# ═══════════════════════════════════════════════════════════

def refined_from_classes(classes: List[DiagramClass], pairing: Pairing,
                         threads: Optional[int] = None) -> SymLaurent:
    return _sum(map_classes(lambda c: sum_multiplicities(c, pairing), classes, threads), SymLaurent.zero())


def refined_invariant(d: HTransverseData, s: int, pairing: PairingLike = None,
                      budget: Optional[int] = None, threads: Optional[int] = None) -> SymLaurent:
    """
    G_Delta(s) from the full enumeration of floor diagrams.

    Args:
        d: Polygon data
        s: Pairing order
        pairing: Explicit pairing of order s (default {1,2}, ..., {2s-1,2s})
        budget: Node budget for the enumeration
        threads: Worker threads for the per-diagram sums

    Raises:
        InvalidPairing: bad order or pairing
        SearchBudgetExceeded: the enumeration ran out of budget
        InvariantViolation: the result does not have degree interior(Delta)
    """
    S = resolve_pairing(d, s, pairing)
    classes = enumerate_diagrams(d, None, budget)
    G = refined_from_classes(classes, S, threads)
    if not G.is_zero() and G.degree_u != 2 * d.interior:
        raise InvariantViolation(f"deg G = {G.degree} but the polygon has {d.interior} interior points")
    logger.info(f"[refined_invariant] s={s} over {len(classes)} classes: {G.pretty()}")
    return G


def invariant_result(d: HTransverseData, s: int, pairing: PairingLike = None,
                     budget: Optional[int] = None, threads: Optional[int] = None) -> InvariantResult:
    S = resolve_pairing(d, s, pairing)
    G = refined_invariant(d, s, S, budget, threads)
    coefficients = list(tilde(G).coeffs) if not G.is_zero() else []
    return InvariantResult(
        polygon=d.vertices, s=s, pairing=S.to_json(), G=G.to_json(),
        degree=G.degree_u // 2 if not G.is_zero() else 0,
        coefficients_by_codegree=coefficients,
    )


def invariant_coeff(d: HTransverseData, s: int, i: int, pairing: PairingLike = None,
                    budget: Optional[int] = None, threads: Optional[int] = None) -> int:
    """
    <G_Delta(s)>_i from the diagrams of codegree at most i only.

    Each diagram of codegree c contributes the coefficient i - c of its
    summed multiplicities, so the marking sums are truncated there.
    """
    if i < 0:
        return 0
    S = resolve_pairing(d, s, pairing)
    classes = enumerate_diagrams(d, max_codegree=i, budget=budget)

    def part(c: DiagramClass) -> int:
        need = i - c.codegree
        return multiplicity_tilde(c, S, limit=need + 1).coeff(need)

    value = sum(map_classes(part, classes, threads))
    logger.info(f"[invariant_coeff] <G>_{i} = {value} for s={s} from {len(classes)} classes")
    return value


def welschinger_specialization(d: HTransverseData, s: int, pairing: PairingLike = None,
                               budget: Optional[int] = None, threads: Optional[int] = None) -> Tuple[int, int]:
    """(G(1), G(-1)): the complex count and the real count with s conjugate pairs."""
    G = refined_invariant(d, s, pairing, budget, threads)
    return G.evaluate(1), G.evaluate(-1)


# ═══════════════════════════════════════════════════════════
# DENOMINATOR-FREE INVARIANT
# ═══════════════════════════════════════════════════════════

def star_from_classes(classes: List[DiagramClass], pairing: Pairing, interior: int,
                      order: Optional[int] = None, threads: Optional[int] = None) -> TPoly:
    parts = map_classes(lambda c: star_multiplicities(c, pairing, interior), classes, threads)
    total = _sum(parts, TPoly())
    return total.truncate(order) if order is not None else total


def star_invariant(d: HTransverseData, s: int, pairing: PairingLike = None, order: Optional[int] = None,
                   budget: Optional[int] = None, threads: Optional[int] = None) -> TPoly:
    """
    G*_Delta(S)(t).

    Args:
        order: Keep only t^0 .. t^(order-1); diagrams of codegree >= order
            are skipped since their contribution starts at t^codeg

    Returns:
        TPoly, complete when order is None
    """
    S = resolve_pairing(d, s, pairing)
    if order is None:
        classes = enumerate_diagrams(d, None, budget)
    else:
        classes = enumerate_diagrams(d, max_codegree=order - 1, budget=budget)
    return star_from_classes(classes, S, d.interior, order, threads)


def tilde_identity_check(d: HTransverseData, s: int, pairing: PairingLike = None,
                         budget: Optional[int] = None, threads: Optional[int] = None) -> TildeIdentityReport:
    """
    Compare tilde(G_Delta(s)) with A0^s A1^(y-2-2s) G*_Delta(S) up to t^deg(G).

    Both sides come from the same diagram list but through independent
    multiplicity formulas.
    """
    S = resolve_pairing(d, s, pairing)
    classes = enumerate_diagrams(d, None, budget)
    G = refined_from_classes(classes, S, threads)
    star = star_from_classes(classes, S, d.interior, None, threads)

    order = d.interior
    lhs = tilde(G) if not G.is_zero() else TPoly()
    product = (
        base_series("A0", order).pow_int(s)
        * base_series("A1", order).pow_int(d.y - 2 - 2 * s)
        * TruncatedSeries(star.coeffs, order)
    ).to_ints()
    tilde_G = [lhs.coeff(j) for j in range(order + 1)]
    report = TildeIdentityReport(
        polygon=d.vertices, s=s, pairing=S.to_json(), order=order,
        tilde_G=tilde_G, product=product, star=list(star.coeffs), equal=tilde_G == product,
    )
    logger.info(f"[tilde_identity_check] s={s} order={order}: {'equal' if report.equal else 'DIFFERENT'}")
    return report


# ═══════════════════════════════════════════════════════════
# UNIVERSALITY
# ═══════════════════════════════════════════════════════════

def universal_value(d: HTransverseData, s: int, i: int) -> Tuple[str, str, int]:
    """
    ("P" or "Q", formula, value) of the universal polynomial at the polygon.

    Non-singular polygons use P_i(y, chi, s), the others Q_i(y, s, n_1, ...).
    """
    if d.is_non_singular:
        poly = universal_P(i)[i]
        value = eval_universal(poly, {"y": d.y, "chi": d.chi, "s": s})
        return "P", format_poly(poly), value
    poly = universal_Q(i)[i]
    assignment = {"y": d.y, "s": s}
    assignment.update({f"n_{k}": n for k, n in d.singular_counts(max(i, 1)).items()})
    return "Q", format_poly(poly), eval_universal(poly, assignment)


def verify_universal(d: HTransverseData, s: int, i: int, budget: Optional[int] = None,
                     threads: Optional[int] = None) -> VerificationReport:
    """
    Enumerated <G_Delta(s)>_i against P_i or Q_i.

    The hypotheses are those of the statement select_theorem picks; a
    difference under satisfied hypotheses shows up as report.consistent
    being False.
    """
    enumerated = invariant_coeff(d, s, i, budget=budget, threads=threads)
    name, formula, value = universal_value(d, s, i)

    which = select_theorem(d)
    hypotheses = check_hypotheses(d, i, s, which) if which is not None else None
    report = VerificationReport(
        polygon=d.vertices, s=s, i=i, polynomial=name, formula=formula,
        enumerated=enumerated, universal=value, equal=enumerated == value,
        theorem=which.value if which is not None else None,
        hypotheses_hold=bool(hypotheses and hypotheses.satisfied),
        failing=hypotheses.failing if hypotheses else "no statement covers this polygon",
    )
    if not report.consistent:
        logger.error(f"[verify_universal] <G>_{i} = {enumerated} but {name}_{i} = {value} with hypotheses satisfied")
    return report


def verify_star(d: HTransverseData, s: int, budget: Optional[int] = None,
                threads: Optional[int] = None) -> StarCheckReport:
    """
    G*_Delta(S) against A2^chi (or prod_k A2(x^k)^n_k) modulo t^i_m.

    i_m is the largest i for which the statement covering the polygon
    applies; nothing is compared when i_m < 1.
    """
    which = select_theorem(d)
    i_m = max_valid_codegree(d, s, which) if which is not None else -1
    if i_m < 1:
        return StarCheckReport(
            polygon=d.vertices, s=s, theorem=which.value if which else None,
            i_m=i_m, applicable=False, equal=True,
        )
    star = star_invariant(d, s, order=i_m, budget=budget, threads=threads)
    universal = singular_star_numeric(d.n_k, i_m - 1)
    observed = [star.coeff(j) for j in range(i_m)]
    return StarCheckReport(
        polygon=d.vertices, s=s, theorem=which.value, i_m=i_m, applicable=True,
        star=observed, universal=universal, equal=observed == universal,
    )


def blowup_cardinality_check(polygon: Union[LatticePolygon, HTransverseData], b: int, m: int, i: int,
                             budget: Optional[int] = None) -> BlowupCardinalityReport:
    """
    |C_i| of the corner cut against sum over k in mZ of p(k/m) |C_(i-k)| of the original.
    """
    if isinstance(polygon, HTransverseData):
        polygon = parse_polygon(polygon.vertices)
    blown = blow_up_corner(polygon, b, m)
    original = h_transverse_data(polygon)
    cut = h_transverse_data(blown)

    base = enumerate_diagrams(original, max_codegree=i, budget=budget)
    lhs = len(enumerate_diagrams(cut, max_codegree=i, budget=budget))
    terms = []
    for k in range(0, i + 1, m):
        classes = sum(1 for c in base if c.codegree <= i - k)
        terms.append(BlowupTerm(k=k, partitions=partitions(k // m), classes=classes))
    rhs = sum(t.partitions * t.classes for t in terms)

    hold = (check_hypotheses(original, i, 0, TheoremSelector.STAR).satisfied
            and check_hypotheses(cut, i, 0, TheoremSelector.STAR).satisfied)
    logger.info(f"[blowup_cardinality_check] b={b} m={m} i={i}: {lhs} vs {rhs}")
    return BlowupCardinalityReport(
        original=original.vertices, blown_up=cut.vertices, b=b, m=m, i=i,
        lhs=lhs, rhs=rhs, terms=terms, equal=lhs == rhs, hypotheses_hold=hold,
    )
