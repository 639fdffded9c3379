"""Backtracking marking oracle over labeled linear extensions (no memoization)"""
import logging
from typing import List, Optional, Tuple

from config import STRUCTURAL_ORACLE_MAX_ELEMENTS
from diagrams import DiagramClass, FloorDiagram, automorphism_count
from errors import DomainError, InexactDivision
from qpoly import SymLaurent, pair_factor, qint_q2, qint_sq
from .pairing import Pairing

logger = logging.getLogger(__name__)

# ("floor", v, 0) | ("edge", e, 0) | ("source", v, k) | ("sink", v, k)
Labeled = Tuple[str, int, int]


def _labeled_elements(diagram: FloorDiagram) -> List[Labeled]:
    elements: List[Labeled] = [("floor", v, 0) for v in range(diagram.a)]
    elements += [("edge", i, 0) for i in range(len(diagram.edges))]
    for v, f in enumerate(diagram.floors):
        elements += [("source", v, k) for k in range(f.sources)]
        elements += [("sink", v, k) for k in range(f.sinks)]
    return elements


def _predecessors(diagram: FloorDiagram, x: Labeled) -> List[Labeled]:
    kind, i, _ = x
    if kind == "floor":
        preds = [("edge", j, 0) for j, e in enumerate(diagram.edges) if e.head == i]
        preds += [("source", i, k) for k in range(diagram.floors[i].sources)]
        return preds
    if kind == "edge":
        return [("floor", diagram.edges[i].tail, 0)]
    if kind == "sink":
        return [("floor", i, 0)]
    return []


def _ends(diagram: FloorDiagram, x: Labeled) -> Tuple[Optional[int], Optional[int], int]:
    kind, i, _ = x
    if kind == "edge":
        e = diagram.edges[i]
        return e.tail, e.head, e.weight
    if kind == "source":
        return None, i, 1
    return i, None, 1


def _pair_value(diagram: FloorDiagram, x: Labeled, y: Labeled) -> Optional[SymLaurent]:
    if x[0] == "floor" and y[0] == "floor":
        return None
    if "floor" in (x[0], y[0]):
        floor, edge = (x, y) if x[0] == "floor" else (y, x)
        tail, head, w = _ends(diagram, edge)
        return qint_q2(w) if floor[1] in (tail, head) else None
    tx, hx, w = _ends(diagram, x)
    ty, hy, w2 = _ends(diagram, y)
    if (hx is not None and hx == hy) or (tx is not None and tx == ty):
        return pair_factor(w, w2)
    return None


def _multiplicity(diagram: FloorDiagram, order: List[Labeled], pairing: Pairing) -> SymLaurent:
    paired = set()
    value = SymLaurent.one()
    for i, j in pairing.pairs:
        factor = _pair_value(diagram, order[i - 1], order[j - 1])
        if factor is None:
            return SymLaurent.zero()
        value = value * factor
        paired.update((i, j))
    for position, x in enumerate(order, start=1):
        if position not in paired and x[0] == "edge":
            value = value * qint_sq(diagram.edges[x[1]].weight)
    return value


def _extensions(diagram: FloorDiagram):
    elements = _labeled_elements(diagram)
    preds = {x: _predecessors(diagram, x) for x in elements}
    order: List[Labeled] = []
    placed = set()

    def extend():
        if len(order) == len(elements):
            yield list(order)
            return
        for x in elements:
            if x not in placed and all(p in placed for p in preds[x]):
                placed.add(x)
                order.append(x)
                yield from extend()
                order.pop()
                placed.discard(x)

    yield from extend()


def _check_size(diagram: FloorDiagram) -> None:
    if diagram.element_count() > STRUCTURAL_ORACLE_MAX_ELEMENTS:
        raise DomainError(
            f"oracle limited to {STRUCTURAL_ORACLE_MAX_ELEMENTS} elements, "
            f"diagram has {diagram.element_count()}"
        )


def _unwrap(diagram) -> FloorDiagram:
    return diagram.diagram if isinstance(diagram, DiagramClass) else diagram


def count_markings_oracle(diagram) -> int:
    """
    nu(D) by walking every labeled linear extension.

    Raises:
        DomainError: the poset is larger than STRUCTURAL_ORACLE_MAX_ELEMENTS
        InexactDivision: the extension count is not a multiple of |Aut|
    """
    d = _unwrap(diagram)
    _check_size(d)
    total = sum(1 for _ in _extensions(d))
    aut = automorphism_count(d)
    if total % aut:
        raise InexactDivision(f"{total} extensions not divisible by |Aut| = {aut}")
    return total // aut


def sum_multiplicities_oracle(diagram, pairing: Pairing) -> SymLaurent:
    """Sum of mu_S over marking classes, one labeled extension at a time."""
    d = _unwrap(diagram)
    _check_size(d)
    total = SymLaurent.zero()
    count = 0
    for order in _extensions(d):
        total = total + _multiplicity(d, order, pairing)
        count += 1
    logger.debug(f"[oracle] {count} labeled extensions")
    if total.is_zero():
        return total
    return total.exact_div(SymLaurent.monomial(0, automorphism_count(d)))
