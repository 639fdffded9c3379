"""MarkingPoset - sums over markings by dynamic programming on downsets"""
import logging
from typing import Dict, List, Optional, Tuple, Union

from diagrams import DiagramClass, FloorDiagram, tree_automorphisms
from errors import InexactDivision
from qpoly import SymLaurent, TPoly, from_tpoly, pair_factor, qint_q2, qint_sq, t_factor, tilde
from .pairing import Pairing

logger = logging.getLogger(__name__)

# ("floor", v) | ("edge", e) | ("source", v) | ("sink", v)
Element = Tuple[str, int]

_ONE = TPoly.one()


class CountRules:
    """Every marking counts 1; pairs are not allowed."""

    def single(self, diagram: FloorDiagram, x: Element) -> TPoly:
        return _ONE

    def pair(self, diagram: FloorDiagram, x: Element, y: Element) -> Optional[TPoly]:
        return _ONE


def _incidence(diagram: FloorDiagram, x: Element) -> Tuple[int, int, int]:
    """(tail floor or -1, head floor or -1, weight) of an edge element."""
    kind, i = x
    if kind == "edge":
        e = diagram.edges[i]
        return e.tail, e.head, e.weight
    if kind == "source":
        return -1, i, 1
    return i, -1, 1


def pair_shape(diagram: FloorDiagram, x: Element, y: Element) -> Optional[str]:
    """
    How two consecutive marked elements interact.

    Returns:
        "floor-edge" for a floor and an edge adjacent to it, "edge-edge" for
        two edges entering or leaving the same floor, None otherwise
    """
    if x[0] == "floor" and y[0] == "floor":
        return None
    if x[0] == "floor" or y[0] == "floor":
        floor, edge = (x, y) if x[0] == "floor" else (y, x)
        tail, head, _ = _incidence(diagram, edge)
        return "floor-edge" if floor[1] in (tail, head) else None
    tx, hx, _ = _incidence(diagram, x)
    ty, hy, _ = _incidence(diagram, y)
    if (hx >= 0 and hx == hy) or (tx >= 0 and tx == ty):
        return "edge-edge"
    return None


class RefinedRules:
    """Refined multiplicity factors, after the tilde transform."""

    def single(self, diagram: FloorDiagram, x: Element) -> TPoly:
        if x[0] == "edge":
            return tilde(qint_sq(diagram.edges[x[1]].weight))
        return _ONE

    def pair(self, diagram: FloorDiagram, x: Element, y: Element) -> Optional[TPoly]:
        shape = pair_shape(diagram, x, y)
        if shape is None:
            return None
        if shape == "floor-edge":
            edge = y if x[0] == "floor" else x
            return tilde(qint_q2(_incidence(diagram, edge)[2]))
        return tilde(pair_factor(_incidence(diagram, x)[2], _incidence(diagram, y)[2]))


class StarRules:
    """Denominator-free factors, which tell bounded from infinite edges apart."""

    def single(self, diagram: FloorDiagram, x: Element) -> TPoly:
        if x[0] == "edge":
            w = diagram.edges[x[1]].weight
            return t_factor(w) * t_factor(w)
        if x[0] in ("source", "sink"):
            return t_factor(1)
        return _ONE

    def pair(self, diagram: FloorDiagram, x: Element, y: Element) -> Optional[TPoly]:
        shape = pair_shape(diagram, x, y)
        if shape is None:
            return None
        if shape == "floor-edge":
            edge = y if x[0] == "floor" else x
            if edge[0] == "edge":
                return t_factor(2 * diagram.edges[edge[1]].weight)
            return TPoly((1, 1))
        bounded = [diagram.edges[e[1]].weight for e in (x, y) if e[0] == "edge"]
        if len(bounded) == 2:
            w, w2 = bounded
            return t_factor(w) * t_factor(w2) * t_factor(w + w2)
        if len(bounded) == 1:
            w = bounded[0]
            return t_factor(w) * t_factor(w + 1)
        return t_factor(2)


Rules = Union[CountRules, RefinedRules, StarRules]

# (placed, floor mask, edge mask, sources placed per floor, sinks placed per floor)
State = Tuple[int, int, int, Tuple[int, ...], Tuple[int, ...]]


class MarkingPoset:
    """
    Floors, bounded edges and infinite edges of a diagram, ordered by
    tail < edge < head, source < floor < sink.

    Markings are linear extensions. Infinite edges at one floor are
    interchangeable, so they are counted as a multiset; the sum over
    labeled extensions is this count times the product of src! snk!.
    """

    def __init__(self, diagram: FloorDiagram):
        self.diagram = diagram
        self.n = diagram.element_count()
        self._incoming: List[int] = [0] * diagram.a
        for i, e in enumerate(diagram.edges):
            self._incoming[e.head] |= 1 << i

    def initial_state(self) -> State:
        a = self.diagram.a
        return (0, 0, 0, (0,) * a, (0,) * a)

    def candidates(self, state: State) -> List[Element]:
        """Minimal elements of the complement of the downset."""
        _, floors_mask, edges_mask, src, snk = state
        out: List[Element] = []
        for v, f in enumerate(self.diagram.floors):
            placed = floors_mask >> v & 1
            if src[v] < f.sources:
                out.append(("source", v))
            if not placed and src[v] == f.sources and (self._incoming[v] & ~edges_mask) == 0:
                out.append(("floor", v))
            if placed and snk[v] < f.sinks:
                out.append(("sink", v))
        for i, e in enumerate(self.diagram.edges):
            if not edges_mask >> i & 1 and floors_mask >> e.tail & 1:
                out.append(("edge", i))
        return out

    @staticmethod
    def advance(state: State, x: Element) -> State:
        placed, floors_mask, edges_mask, src, snk = state
        kind, i = x
        if kind == "floor":
            floors_mask |= 1 << i
        elif kind == "edge":
            edges_mask |= 1 << i
        elif kind == "source":
            src = src[:i] + (src[i] + 1,) + src[i + 1:]
        else:
            snk = snk[:i] + (snk[i] + 1,) + snk[i + 1:]
        return (placed + 1, floors_mask, edges_mask, src, snk)

    def total(self, rules: Rules, pairing: Pairing, limit: Optional[int] = None) -> TPoly:
        """
        Sum over multiset linear extensions of the product of rule factors.

        Args:
            rules: Factor rules (count, refined or star)
            pairing: Positions consumed two at a time
            limit: Keep only coefficients of t^0 .. t^(limit-1)
        """
        starts = pairing.starts()
        memo: Dict[State, TPoly] = {}
        size = limit

        def mul(p: TPoly, q: TPoly) -> TPoly:
            return p.mul_truncated(q, size) if size is not None else p * q

        def walk(state: State) -> TPoly:
            cached = memo.get(state)
            if cached is not None:
                return cached
            placed = state[0]
            if placed == self.n:
                return _ONE if size is None or size > 0 else TPoly()
            result = TPoly()
            if placed + 1 in starts:
                for x in self.candidates(state):
                    middle = self.advance(state, x)
                    for y in self.candidates(middle):
                        factor = rules.pair(self.diagram, x, y)
                        if factor is None:
                            continue
                        rest = walk(self.advance(middle, y))
                        if not rest.is_zero():
                            result = result + mul(factor, rest)
            else:
                for x in self.candidates(state):
                    rest = walk(self.advance(state, x))
                    if not rest.is_zero():
                        result = result + mul(rules.single(self.diagram, x), rest)
            memo[state] = result
            return result

        value = walk(self.initial_state())
        logger.debug(f"[MarkingPoset] {len(memo)} downsets for n={self.n}")
        return value


def _as_class(diagram: Union[DiagramClass, FloorDiagram]) -> Tuple[FloorDiagram, int]:
    if isinstance(diagram, DiagramClass):
        return diagram.diagram, diagram.tree_aut
    return diagram, tree_automorphisms(diagram)


def _divide(total: TPoly, tree_aut: int) -> TPoly:
    out = []
    for c in total.coeffs:
        if c % tree_aut:
            raise InexactDivision(f"marking sum {total} not divisible by |Aut| part {tree_aut}")
        out.append(c // tree_aut)
    return TPoly(out)


def count_markings(diagram: Union[DiagramClass, FloorDiagram]) -> int:
    """
    nu(D): markings up to isomorphism.

    Raises:
        InexactDivision: the extension count is not a multiple of |Aut|
    """
    d, tree_aut = _as_class(diagram)
    total = MarkingPoset(d).total(CountRules(), Pairing())
    return _divide(total, tree_aut).coeff(0)


def multiplicity_tilde(diagram: Union[DiagramClass, FloorDiagram], pairing: Pairing,
                       limit: Optional[int] = None) -> TPoly:
    """tilde of the summed refined multiplicities, truncated to `limit` coefficients."""
    d, tree_aut = _as_class(diagram)
    return _divide(MarkingPoset(d).total(RefinedRules(), pairing, limit), tree_aut)


def sum_multiplicities(diagram: Union[DiagramClass, FloorDiagram], pairing: Pairing) -> SymLaurent:
    """
    Sum of mu_S(D, m) over isomorphism classes of markings m.

    Every non-zero multiplicity of D has q-degree deg(D), so the sum is
    carried in the tilde domain and mapped back once.
    """
    d, _ = _as_class(diagram)
    return from_tpoly(multiplicity_tilde(diagram, pairing), 2 * d.degree)


def star_multiplicities(diagram: Union[DiagramClass, FloorDiagram], pairing: Pairing, interior: int) -> TPoly:
    """Sum of the denominator-free multiplicities, including the t^codeg factor."""
    d, tree_aut = _as_class(diagram)
    total = _divide(MarkingPoset(d).total(StarRules(), pairing), tree_aut)
    return TPoly.monomial(d.codegree(interior)) * total
