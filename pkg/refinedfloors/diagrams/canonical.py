"""Canonical forms and automorphism counts of floor diagrams"""
from collections import Counter
from math import factorial, prod
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .floor_diagram import FloorDiagram

# (label, ((direction, weight, child_code), ...)); direction +1 leaves the parent
Code = Tuple


def _adjacency(diagram: FloorDiagram) -> Dict[int, List[Tuple[int, int, int]]]:
    """floor -> [(neighbor, direction, weight)], direction +1 when the edge leaves the floor."""
    adj: Dict[int, List[Tuple[int, int, int]]] = {v: [] for v in range(diagram.a)}
    for e in diagram.edges:
        adj[e.tail].append((e.head, 1, e.weight))
        adj[e.head].append((e.tail, -1, e.weight))
    return adj


def _rooted(diagram: FloorDiagram, adj, v: int, parent: int) -> Tuple[Code, int]:
    """AHU code of the subtree at v and its automorphism count fixing v."""
    entries = []
    aut = 1
    for u, direction, weight in adj[v]:
        if u == parent:
            continue
        child_code, child_aut = _rooted(diagram, adj, u, v)
        entries.append((direction, weight, child_code))
        aut *= child_aut
    entries.sort()
    aut *= prod(factorial(count) for count in Counter(entries).values())
    return (diagram.floors[v].label(), tuple(entries)), aut


def _root_codes(diagram: FloorDiagram) -> List[Tuple[Code, int]]:
    adj = _adjacency(diagram)
    return [_rooted(diagram, adj, v, -1) for v in range(diagram.a)]


def canonical_form(diagram: FloorDiagram) -> str:
    """
    Isomorphism invariant of a diagram.

    The smallest rooted code over all choices of root; two diagrams get
    the same string exactly when they are isomorphic.
    """
    return repr(min(code for code, _ in _root_codes(diagram)))


def tree_automorphisms(diagram: FloorDiagram) -> int:
    """
    Automorphisms of the decorated tree, infinite edges not permuted.

    Roots with the minimal code form one orbit, so |Aut| is the orbit size
    times the stabilizer of one such root.
    """
    codes = _root_codes(diagram)
    best = min(code for code, _ in codes)
    orbit = [aut for code, aut in codes if code == best]
    return len(orbit) * orbit[0]


def automorphism_count(diagram: FloorDiagram) -> int:
    """|Aut(D)|: tree automorphisms times permutations of the infinite edges at each floor."""
    infinite = prod(factorial(f.sources) * factorial(f.sinks) for f in diagram.floors)
    return tree_automorphisms(diagram) * infinite


class DiagramClass(BaseModel):
    """An isomorphism class of floor diagrams with its invariants"""
    model_config = ConfigDict(frozen=True)

    diagram: FloorDiagram
    canonical: str = Field(description="Canonical form; equal iff isomorphic")
    degree: int
    codegree: int
    aut: int = Field(ge=1, description="|Aut(D)| including infinite-edge permutations")
    tree_aut: int = Field(ge=1, description="Automorphisms of the decorated tree alone")

    def to_json(self) -> Dict:
        payload = self.diagram.to_json()
        payload.update({"degree": self.degree, "codegree": self.codegree, "aut": self.aut})
        return payload


def make_class(diagram: FloorDiagram, interior: int) -> DiagramClass:
    tree_aut = tree_automorphisms(diagram)
    infinite = prod(factorial(f.sources) * factorial(f.sinks) for f in diagram.floors)
    return DiagramClass(
        diagram=diagram,
        canonical=canonical_form(diagram),
        degree=diagram.degree,
        codegree=diagram.codegree(interior),
        aut=tree_aut * infinite,
        tree_aut=tree_aut,
    )


def sort_classes(classes: List[DiagramClass]) -> List[DiagramClass]:
    """Deterministic order: by codegree, then canonical form."""
    return sorted(classes, key=lambda c: (c.codegree, c.canonical))
