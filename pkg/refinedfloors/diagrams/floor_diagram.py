"""FloorDiagram - genus-0 floor diagrams and their local data"""
from enum import Enum
from typing import Dict, List, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from errors import ConfigurationMismatch, NegativeCodegree


class Floor(BaseModel):
    """One floor with its decorations and infinite edges"""
    model_config = ConfigDict(frozen=True)

    ell: int = Field(description="Left direction assigned to the floor")
    r: int = Field(description="Right direction assigned to the floor")
    sources: int = Field(default=0, ge=0, description="Weight-1 infinite edges entering the floor")
    sinks: int = Field(default=0, ge=0, description="Weight-1 infinite edges leaving the floor")

    @property
    def div(self) -> int:
        return self.r - self.ell

    def label(self) -> Tuple[int, int, int, int]:
        return (self.ell, self.r, self.sources, self.sinks)


class BoundedEdge(BaseModel):
    """Oriented bounded edge tail -> head"""
    model_config = ConfigDict(frozen=True)

    tail: int = Field(ge=0, description="Index of the lower floor")
    head: int = Field(ge=0, description="Index of the upper floor")
    weight: int = Field(ge=1, description="Edge weight")


class EdgeKind(str, Enum):
    BOUNDED = "bounded"
    SOURCE = "source"
    SINK = "sink"


class EdgeRef(BaseModel):
    """
    Reference to an edge of a diagram.

    For BOUNDED, index is the position in FloorDiagram.edges; for SOURCE and
    SINK it is the floor the infinite edge is attached to.
    """
    model_config = ConfigDict(frozen=True)

    kind: EdgeKind
    index: int = Field(ge=0)


class FloorDiagram(BaseModel):
    """
    Floor diagram: a tree of floors joined by weighted oriented edges.

    Floor indices are positions in `floors` (0-based).
    """
    model_config = ConfigDict(frozen=True)

    floors: Tuple[Floor, ...]
    edges: Tuple[BoundedEdge, ...] = ()

    @property
    def a(self) -> int:
        return len(self.floors)

    # ─── Local data ───

    def bounded_in(self, v: int) -> int:
        return sum(e.weight for e in self.edges if e.head == v)

    def bounded_out(self, v: int) -> int:
        return sum(e.weight for e in self.edges if e.tail == v)

    def divergence(self, v: int) -> int:
        """Weight entering v minus weight leaving v, infinite edges included."""
        f = self.floors[v]
        return self.bounded_in(v) + f.sources - self.bounded_out(v) - f.sinks

    def satisfies_divergence(self) -> bool:
        return all(self.divergence(v) == f.div for v, f in enumerate(self.floors))

    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.a))
        graph.add_edges_from((e.tail, e.head) for e in self.edges)
        return graph

    def is_tree(self) -> bool:
        """Genus 0: the bounded edges form a spanning tree on the floors."""
        if self.a == 1:
            return not self.edges
        return len(self.edges) == self.a - 1 and nx.is_tree(self.to_graph())

    def maximal_floors(self) -> List[int]:
        tails = {e.tail for e in self.edges}
        return [v for v in range(self.a) if v not in tails]

    def minimal_floors(self) -> List[int]:
        heads = {e.head for e in self.edges}
        return [v for v in range(self.a) if v not in heads]

    def has_unique_max_floor(self) -> bool:
        return len(self.maximal_floors()) == 1

    def has_unique_min_floor(self) -> bool:
        return len(self.minimal_floors()) == 1

    # ─── Degree ───

    @property
    def degree(self) -> int:
        """Sum of w(e) - 1 over bounded edges; infinite edges have weight 1."""
        return sum(e.weight - 1 for e in self.edges)

    def codegree(self, interior: int) -> int:
        """
        interior - degree.

        Raises:
            NegativeCodegree: the diagram does not belong to a polygon with this interior count
        """
        value = interior - self.degree
        if value < 0:
            raise NegativeCodegree(f"degree {self.degree} exceeds interior count {interior}")
        return value

    def total_sources(self) -> int:
        return sum(f.sources for f in self.floors)

    def total_sinks(self) -> int:
        return sum(f.sinks for f in self.floors)

    def ell_multiset(self) -> List[int]:
        return sorted(f.ell for f in self.floors)

    def r_multiset(self) -> List[int]:
        return sorted(f.r for f in self.floors)

    def element_count(self) -> int:
        """Floors, bounded edges and infinite edges: the size of the marking poset."""
        return self.a + len(self.edges) + self.total_sources() + self.total_sinks()

    def to_json(self) -> Dict:
        return {
            "floors": [
                {"ell": f.ell, "r": f.r, "sources": f.sources, "sinks": f.sinks}
                for f in self.floors
            ],
            "edges": [[e.tail, e.head, e.weight] for e in self.edges],
        }

    @classmethod
    def from_parts(cls, floors: List[Tuple[int, int, int, int]], edges: List[Tuple[int, int, int]]) -> "FloorDiagram":
        """Build from (ell, r, sources, sinks) tuples and (tail, head, weight) triples."""
        a = len(floors)
        for t, h, _ in edges:
            if not (0 <= t < a and 0 <= h < a) or t == h:
                raise ConfigurationMismatch(f"edge {t}->{h} does not join two of {a} floors")
        return cls(
            floors=tuple(Floor(ell=l, r=r, sources=src, sinks=snk) for l, r, src, snk in floors),
            edges=tuple(BoundedEdge(tail=t, head=h, weight=w) for t, h, w in edges),
        )
