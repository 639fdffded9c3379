"""Degenerations A+, A-, B_ell and B_r of floor diagrams"""
import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from errors import ConfigurationMismatch
from .floor_diagram import BoundedEdge, EdgeKind, EdgeRef, Floor, FloorDiagram

logger = logging.getLogger(__name__)


class Operation(BaseModel):
    """One applicable move and the codegree drop it causes"""
    model_config = ConfigDict(frozen=True)

    name: str = Field(description="A+, A-, B_ell or B_r")
    e1: int = Field(description="Index of the bounded edge v1 -> v2")
    e2: Optional[EdgeRef] = Field(default=None, description="Moved edge for A+ / A-")
    drop: int = Field(description="Expected codegree decrease")


def _edge_weight(diagram: FloorDiagram, ref: EdgeRef) -> int:
    if ref.kind == EdgeKind.BOUNDED:
        return diagram.edges[ref.index].weight
    return 1


def _check_bounded(diagram: FloorDiagram, e1: int) -> BoundedEdge:
    if not 0 <= e1 < len(diagram.edges):
        raise ConfigurationMismatch(f"no bounded edge {e1}")
    return diagram.edges[e1]


def _with_floor(floors: List[Floor], v: int, **changes) -> None:
    floors[v] = floors[v].model_copy(update=changes)


def op_A_plus(diagram: FloorDiagram, e1: int, e2: EdgeRef) -> FloorDiagram:
    """
    Move the tail of e2 from v1 to v2 and add w(e2) to e1 = v1 -> v2.

    e2 must leave v1 without entering v2: a bounded edge v1 -> x with
    x != v2, or a sink of v1. Codegree drops by w(e2).

    Raises:
        ConfigurationMismatch: the local configuration is absent
    """
    edge1 = _check_bounded(diagram, e1)
    v1, v2 = edge1.tail, edge1.head
    edges = list(diagram.edges)
    floors = list(diagram.floors)

    if e2.kind == EdgeKind.BOUNDED:
        if e2.index == e1 or not 0 <= e2.index < len(edges):
            raise ConfigurationMismatch(f"A+ needs a second edge distinct from {e1}")
        moved = edges[e2.index]
        if moved.tail != v1 or moved.head == v2:
            raise ConfigurationMismatch(f"edge {e2.index} does not leave v{v1} towards a floor other than v{v2}")
        edges[e2.index] = moved.model_copy(update={"tail": v2})
    elif e2.kind == EdgeKind.SINK:
        if e2.index != v1 or floors[v1].sinks == 0:
            raise ConfigurationMismatch(f"floor {v1} has no sink to move")
        _with_floor(floors, v1, sinks=floors[v1].sinks - 1)
        _with_floor(floors, v2, sinks=floors[v2].sinks + 1)
    else:
        raise ConfigurationMismatch("A+ moves an edge leaving v1, not a source")

    edges[e1] = edge1.model_copy(update={"weight": edge1.weight + _edge_weight(diagram, e2)})
    return FloorDiagram(floors=tuple(floors), edges=tuple(edges))


def op_A_minus(diagram: FloorDiagram, e1: int, e2: EdgeRef) -> FloorDiagram:
    """
    Move the head of e2 from v2 to v1 and add w(e2) to e1 = v1 -> v2.

    e2 must enter v2 without leaving v1: a bounded edge x -> v2 with
    x != v1, or a source of v2. Codegree drops by w(e2).
    """
    edge1 = _check_bounded(diagram, e1)
    v1, v2 = edge1.tail, edge1.head
    edges = list(diagram.edges)
    floors = list(diagram.floors)

    if e2.kind == EdgeKind.BOUNDED:
        if e2.index == e1 or not 0 <= e2.index < len(edges):
            raise ConfigurationMismatch(f"A- needs a second edge distinct from {e1}")
        moved = edges[e2.index]
        if moved.head != v2 or moved.tail == v1:
            raise ConfigurationMismatch(f"edge {e2.index} does not enter v{v2} from a floor other than v{v1}")
        edges[e2.index] = moved.model_copy(update={"head": v1})
    elif e2.kind == EdgeKind.SOURCE:
        if e2.index != v2 or floors[v2].sources == 0:
            raise ConfigurationMismatch(f"floor {v2} has no source to move")
        _with_floor(floors, v2, sources=floors[v2].sources - 1)
        _with_floor(floors, v1, sources=floors[v1].sources + 1)
    else:
        raise ConfigurationMismatch("A- moves an edge entering v2, not a sink")

    edges[e1] = edge1.model_copy(update={"weight": edge1.weight + _edge_weight(diagram, e2)})
    return FloorDiagram(floors=tuple(floors), edges=tuple(edges))


def op_B_ell(diagram: FloorDiagram, e: int) -> FloorDiagram:
    """
    Swap ell between the ends of e = v1 -> v2 when ell(v1) < ell(v2).

    w(e) grows by ell(v2) - ell(v1), which is also the codegree drop.
    """
    edge = _check_bounded(diagram, e)
    v1, v2 = edge.tail, edge.head
    lo, hi = diagram.floors[v1].ell, diagram.floors[v2].ell
    if lo >= hi:
        raise ConfigurationMismatch(f"B_ell needs ell(v1) < ell(v2), got {lo} and {hi}")
    floors = list(diagram.floors)
    _with_floor(floors, v1, ell=hi)
    _with_floor(floors, v2, ell=lo)
    edges = list(diagram.edges)
    edges[e] = edge.model_copy(update={"weight": edge.weight + hi - lo})
    return FloorDiagram(floors=tuple(floors), edges=tuple(edges))


def op_B_r(diagram: FloorDiagram, e: int) -> FloorDiagram:
    """
    Swap r between the ends of e = v1 -> v2 when r(v1) > r(v2).

    w(e) grows by r(v1) - r(v2), which is also the codegree drop.
    """
    edge = _check_bounded(diagram, e)
    v1, v2 = edge.tail, edge.head
    hi, lo = diagram.floors[v1].r, diagram.floors[v2].r
    if hi <= lo:
        raise ConfigurationMismatch(f"B_r needs r(v1) > r(v2), got {hi} and {lo}")
    floors = list(diagram.floors)
    _with_floor(floors, v1, r=lo)
    _with_floor(floors, v2, r=hi)
    edges = list(diagram.edges)
    edges[e] = edge.model_copy(update={"weight": edge.weight + hi - lo})
    return FloorDiagram(floors=tuple(floors), edges=tuple(edges))


def applicable_operations(diagram: FloorDiagram) -> List[Operation]:
    """Every legal move on the diagram, in a deterministic order."""
    moves: List[Operation] = []
    for i, edge in enumerate(diagram.edges):
        v1, v2 = edge.tail, edge.head
        for j, other in enumerate(diagram.edges):
            if j == i:
                continue
            if other.tail == v1 and other.head != v2:
                moves.append(Operation(name="A+", e1=i, e2=EdgeRef(kind=EdgeKind.BOUNDED, index=j), drop=other.weight))
            if other.head == v2 and other.tail != v1:
                moves.append(Operation(name="A-", e1=i, e2=EdgeRef(kind=EdgeKind.BOUNDED, index=j), drop=other.weight))
        if diagram.floors[v1].sinks:
            moves.append(Operation(name="A+", e1=i, e2=EdgeRef(kind=EdgeKind.SINK, index=v1), drop=1))
        if diagram.floors[v2].sources:
            moves.append(Operation(name="A-", e1=i, e2=EdgeRef(kind=EdgeKind.SOURCE, index=v2), drop=1))
        ell_gap = diagram.floors[v2].ell - diagram.floors[v1].ell
        if ell_gap > 0:
            moves.append(Operation(name="B_ell", e1=i, drop=ell_gap))
        r_gap = diagram.floors[v1].r - diagram.floors[v2].r
        if r_gap > 0:
            moves.append(Operation(name="B_r", e1=i, drop=r_gap))
    return moves


def apply_operation(diagram: FloorDiagram, move: Operation) -> FloorDiagram:
    if move.name == "A+":
        return op_A_plus(diagram, move.e1, move.e2)
    if move.name == "A-":
        return op_A_minus(diagram, move.e1, move.e2)
    if move.name == "B_ell":
        return op_B_ell(diagram, move.e1)
    if move.name == "B_r":
        return op_B_r(diagram, move.e1)
    raise ConfigurationMismatch(f"unknown operation {move.name!r}")


def random_walk(diagram: FloorDiagram, steps: int, rng) -> List[Tuple[FloorDiagram, Operation, FloorDiagram]]:
    """
    Apply up to `steps` random legal moves.

    Returns:
        (before, move, after) triples; stops early when no move applies
    """
    history = []
    current = diagram
    for _ in range(steps):
        moves = applicable_operations(current)
        if not moves:
            break
        move = rng.choice(moves)
        after = apply_operation(current, move)
        history.append((current, move, after))
        current = after
    return history
