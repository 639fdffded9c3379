"""DiagramToolkit - Facade for floor diagram enumeration and degenerations"""
import logging
from typing import List, Optional

from polygon import HTransverseData
from .budget import NodeBudget
from .floor_diagram import Floor, BoundedEdge, EdgeKind, EdgeRef, FloorDiagram
from .canonical import (
    DiagramClass, canonical_form, automorphism_count, tree_automorphisms, make_class,
    sort_classes,
)
from .exhaustive import ExhaustiveEnumerator, labeled_trees, weak_compositions, forced_edges
from .sweep import FloorSweep, spread_partitions
from .operations import (
    Operation, op_A_plus, op_A_minus, op_B_ell, op_B_r, applicable_operations,
    apply_operation, random_walk,
)

logger = logging.getLogger(__name__)


def enumerate_diagrams(
    d: HTransverseData,
    max_codegree: Optional[int] = None,
    budget: Optional[int] = None,
) -> List[DiagramClass]:
    """
    All isomorphism classes of floor diagrams of the polygon.

    Args:
        d: Polygon data
        max_codegree: Keep only classes of codegree <= this bound (None: all)
        budget: Node budget (None: REFINED_FLOOR_BUDGET or the default)

    Returns:
        Classes sorted by codegree, then canonical form

    Raises:
        SearchBudgetExceeded: the engine visited more nodes than allowed
    """
    if max_codegree is None:
        engine = ExhaustiveEnumerator(d, NodeBudget(budget, engine="ExhaustiveEnumerator"))
    else:
        if max_codegree < 0:
            return []
        engine = FloorSweep(d, max_codegree, NodeBudget(budget, engine="FloorSweep"))
    return engine.run()


def codegree_classes(d: HTransverseData, i: int, budget: Optional[int] = None) -> int:
    """|C_i|: number of classes of codegree at most i."""
    return len(enumerate_diagrams(d, max_codegree=i, budget=budget))


class DiagramToolkit:
    """
    Facade for diagram_core.
    Enumerates once per bound and keeps the results for repeated queries.
    """

    def __init__(self, data: HTransverseData, budget: Optional[int] = None):
        """
        Initialize the toolkit.

        Args:
            data: Polygon data
            budget: Node budget forwarded to the engines
        """
        self.data = data
        self.budget = budget
        self._cache = {}

    def classes(self, max_codegree: Optional[int] = None) -> List[DiagramClass]:
        if max_codegree not in self._cache:
            self._cache[max_codegree] = enumerate_diagrams(self.data, max_codegree, self.budget)
        return self._cache[max_codegree]

    def codegree_classes(self, i: int) -> int:
        return len(self.classes(i))

    def unique_max_floor_holds(self, i: int) -> bool:
        """Every class of codegree <= i has exactly one maximal floor."""
        return all(c.diagram.has_unique_max_floor() for c in self.classes(i))

    def operations(self, diagram: FloorDiagram) -> List[Operation]:
        return applicable_operations(diagram)


# Export public API
__all__ = [
    'DiagramToolkit', 'NodeBudget',
    'Floor', 'BoundedEdge', 'EdgeKind', 'EdgeRef', 'FloorDiagram', 'DiagramClass', 'Operation',
    'enumerate_diagrams', 'codegree_classes',
    'canonical_form', 'automorphism_count', 'tree_automorphisms', 'make_class', 'sort_classes',
    'ExhaustiveEnumerator', 'FloorSweep', 'labeled_trees', 'weak_compositions', 'forced_edges',
    'spread_partitions',
    'op_A_plus', 'op_A_minus', 'op_B_ell', 'op_B_r', 'applicable_operations', 'apply_operation',
    'random_walk',
]
