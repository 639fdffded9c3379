"""ExhaustiveEnumerator - every floor diagram of a polygon, via labeled trees"""
import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from sympy.utilities.iterables import multiset_permutations

from polygon import HTransverseData
from .budget import NodeBudget
from .canonical import DiagramClass, canonical_form, make_class, sort_classes
from .floor_diagram import FloorDiagram

logger = logging.getLogger(__name__)

# (child, parent) pairs listed leaves first, rooted at floor 0
TreeOrder = Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def labeled_trees(a: int) -> Tuple[TreeOrder, ...]:
    """All a^(a-2) labeled trees on 0..a-1, each as a leaves-first (child, parent) list."""
    if a == 1:
        return ((),)
    trees = []
    for sequence in product(range(a), repeat=a - 2):
        tree = nx.from_prufer_sequence(list(sequence))
        downward = list(nx.bfs_edges(tree, 0))
        trees.append(tuple((child, parent) for parent, child in reversed(downward)))
    return tuple(trees)


def weak_compositions(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Ordered k-tuples of non-negative integers summing to n."""
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, k - 1):
            yield (first,) + rest


def forced_edges(order: TreeOrder, balance: List[int]) -> Optional[List[Tuple[int, int, int]]]:
    """
    Orient and weight the tree edges from the floor balances.

    balance[v] is the bounded out-flow minus in-flow v needs. The flow
    through the edge above a subtree equals the subtree's total balance:
    positive leaves the subtree, negative enters it, zero is impossible.

    Returns:
        (tail, head, weight) triples, or None if some edge would get weight 0
    """
    subtotal = list(balance)
    edges = []
    for child, parent in order:
        flow = subtotal[child]
        if flow == 0:
            return None
        if flow > 0:
            edges.append((child, parent, flow))
        else:
            edges.append((parent, child, -flow))
        subtotal[parent] += flow
    return edges


class ExhaustiveEnumerator:
    """
    Enumerates all floor diagrams of a polygon.

    Floors are labeled so that the left directions appear in sorted order;
    every class has such a representative, so only the right directions,
    the infinite edges and the labeled trees are varied. Orientation and
    weights are forced by the divergence condition.
    """

    def __init__(self, data: HTransverseData, budget: Optional[NodeBudget] = None):
        self.data = data
        self.budget = budget or NodeBudget(engine="ExhaustiveEnumerator")

    def run(self) -> List[DiagramClass]:
        d = self.data
        a = d.a
        ells = sorted(d.L)
        trees = labeled_trees(a)
        found: Dict[str, DiagramClass] = {}

        for rs in multiset_permutations(d.R):
            for sources in weak_compositions(d.e_bot, a):
                for sinks in weak_compositions(d.e_top, a):
                    balance = [sources[v] - sinks[v] - (rs[v] - ells[v]) for v in range(a)]
                    floors = [(ells[v], rs[v], sources[v], sinks[v]) for v in range(a)]
                    for order in trees:
                        self.budget.tick()
                        edges = forced_edges(order, balance)
                        if edges is None:
                            continue
                        diagram = FloorDiagram.from_parts(floors, edges)
                        key = canonical_form(diagram)
                        if key not in found:
                            found[key] = make_class(diagram, d.interior)

        logger.info(f"[ExhaustiveEnumerator] {len(found)} classes after {self.budget.visited} nodes")
        return sort_classes(list(found.values()))
