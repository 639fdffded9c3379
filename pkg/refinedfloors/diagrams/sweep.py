"""FloorSweep - floor diagrams of bounded codegree, built floor by floor"""
import logging
from collections import Counter, defaultdict
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from polygon import HTransverseData
from .budget import NodeBudget
from .canonical import DiagramClass, canonical_form, make_class, sort_classes
from .floor_diagram import FloorDiagram

logger = logging.getLogger(__name__)

# Open edge: (tail position, weight); its head is not placed yet
OpenEdge = Tuple[int, int]


def _bounded_partitions(n: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of n into parts <= max_part, parts descending."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _bounded_partitions(n - first, first):
            yield (first,) + rest


def spread_partitions(n: int, allowance: int) -> Iterator[Tuple[int, ...]]:
    """
    Partitions of n whose parts other than the largest add up to at most allowance.

    Splitting one out-flow into parts raises the stretch bound of its
    component by at least n minus the largest part.
    """
    if n == 0:
        yield ()
        return
    for largest in range(n, 0, -1):
        if n - largest > allowance:
            break
        for rest in _bounded_partitions(n - largest, largest):
            yield (largest,) + rest


def _lookahead(groups: Sequence[Sequence[int]]) -> int:
    """
    Extra stretch forced by open edges sharing a component.

    Edges leaving one component end on pairwise distinct floors (two ending
    on the same floor would close a cycle), so with weights sorted
    decreasingly the k-th edge travels at least k - 1 levels further than
    the next floor.
    """
    total = 0
    for ws in groups:
        for rank, w in enumerate(sorted(ws, reverse=True)):
            total += rank * w
    return total


class FloorSweep:
    """
    Enumerates the floor diagrams of codegree <= max_codegree.

    Floors are placed one at a time along a linear extension of the
    diagram. Placing floors 0..J-1 fixes the total weight O_j crossing each
    cut j < J, and

        degree = sum_j O_j - (a - 1) - sum_e w(e) (head(e) - tail(e) - 1)

    so an upper bound on the remaining O_j together with a lower bound on
    the stretch term bounds the degree of every completion. Branches whose
    bound falls below interior - max_codegree are dropped.
    """

    def __init__(self, data: HTransverseData, max_codegree: int, budget: Optional[NodeBudget] = None):
        self.data = data
        self.a = data.a
        self.max_codegree = max_codegree
        self.need = data.interior - max_codegree
        self.budget = budget or NodeBudget(engine="FloorSweep")
        self._found: Dict[str, DiagramClass] = {}

    def run(self) -> List[DiagramClass]:
        d = self.data
        self._found = {}
        self._place(
            J=0,
            ell_rem=Counter(d.L),
            r_rem=Counter(d.R),
            s_rem=d.e_bot,
            t_rem=d.e_top,
            floors=(),
            edges=(),
            open_edges=(),
            comp=(),
            sum_o=0,
            slack_closed=0,
        )
        logger.info(
            f"[FloorSweep] {len(self._found)} classes of codegree <= {self.max_codegree} "
            f"after {self.budget.visited} nodes"
        )
        return sort_classes(list(self._found.values()))

    # ─── Degree bound ───

    def _future_gain(self, placed: int, cut_total: int, ell_rem: Counter, r_rem: Counter, s_rem: int) -> int:
        """
        Largest possible sum of O_j over the cuts not fixed yet.

        Floor t contributes its balance times (a - 1 - t); each term is
        maximized on its own by rearrangement: large ell early, small r
        early, remaining sources at the next floor, sinks at the last one.
        """
        a = self.a
        remaining_cuts = a - 1 - placed
        if remaining_cuts <= 0:
            return 0
        weights = [a - 1 - t for t in range(placed, a)]  # descending
        ells = sorted(ell_rem.elements(), reverse=True)
        rs = sorted(r_rem.elements())
        gain = remaining_cuts * cut_total + s_rem * weights[0]
        gain += sum(c * l for c, l in zip(weights, ells))
        gain -= sum(c * r for c, r in zip(weights, rs))
        return gain

    def _degree_bound(self, placed: int, sum_o: int, open_edges: Sequence[OpenEdge], slack_lb: int,
                      ell_rem: Counter, r_rem: Counter, s_rem: int) -> int:
        cut_total = sum(w for _, w in open_edges)
        return sum_o + self._future_gain(placed, cut_total, ell_rem, r_rem, s_rem) - (self.a - 1) - slack_lb

    # ─── Search ───

    def _record(self, floors, edges) -> None:
        diagram = FloorDiagram.from_parts(list(floors), list(edges))
        if self.data.interior - diagram.degree > self.max_codegree:
            return
        key = canonical_form(diagram)
        if key not in self._found:
            self._found[key] = make_class(diagram, self.data.interior)

    def _place(self, J: int, ell_rem: Counter, r_rem: Counter, s_rem: int, t_rem: int,
               floors: tuple, edges: tuple, open_edges: Tuple[OpenEdge, ...], comp: tuple,
               sum_o: int, slack_closed: int) -> None:
        self.budget.tick()
        a = self.a
        if J == a:
            self._record(floors, edges)
            return
        last = J == a - 1

        by_comp: Dict[int, List[OpenEdge]] = defaultdict(list)
        for edge in open_edges:
            by_comp[comp[edge[0]]].append(edge)
        comp_ids = sorted(by_comp)
        if last and any(len(by_comp[c]) != 1 for c in comp_ids):
            return

        options = [
            sorted(set(by_comp[c])) if last else [None] + sorted(set(by_comp[c]))
            for c in comp_ids
        ]

        for closing in product(*options):
            closed = [e for e in closing if e is not None]
            merged = {comp[p] for p, _ in closed}
            remaining = list(open_edges)
            for e in closed:
                remaining.remove(e)
            merged_rest = [e for e in remaining if comp[e[0]] in merged]
            other = [e for e in remaining if comp[e[0]] not in merged]
            if last and remaining:
                continue

            in_w = sum(w for _, w in closed)
            slack_c = slack_closed + sum(w * (J - p - 1) for p, w in closed)
            # stretch of surviving edges once floor J is placed
            stretch_rest = sum(w * (J - p) for p, w in remaining)
            other_groups: Dict[int, List[int]] = defaultdict(list)
            for p, w in other:
                other_groups[comp[p]].append(w)
            other_look = _lookahead(list(other_groups.values()))
            rest_weights = [w for _, w in merged_rest]

            new_edges = edges + tuple((p, J, w) for p, w in closed)
            new_comp = tuple(J if c in merged else c for c in comp) + (J,)

            for ell in sorted(ell_rem):
                ell_next = ell_rem.copy()
                ell_next[ell] -= 1
                if not ell_next[ell]:
                    del ell_next[ell]
                for r in sorted(r_rem):
                    r_next = r_rem.copy()
                    r_next[r] -= 1
                    if not r_next[r]:
                        del r_next[r]
                    div = r - ell

                    src_range = [s_rem] if last else range(s_rem + 1)
                    for src in src_range:
                        snk_range = [t_rem] if last else range(t_rem + 1)
                        for snk in snk_range:
                            bout = in_w + src - snk - div
                            if bout < 0:
                                continue
                            new_floor = floors + ((ell, r, src, snk),)
                            if last:
                                if bout == 0:
                                    self._place(
                                        J + 1, ell_next, r_next, 0, 0, new_floor, new_edges,
                                        (), new_comp, sum_o, slack_c,
                                    )
                                continue
                            if bout == 0 and not merged_rest:
                                continue  # the new floor could never be reached again

                            s_next = s_rem - src
                            single = [bout] if bout else []
                            group = rest_weights + single
                            best_slack = slack_c + stretch_rest + other_look + _lookahead([group])
                            best_open = remaining + [(J, w) for w in single]
                            cut = sum(w for _, w in best_open)
                            bound = self._degree_bound(
                                J + 1, sum_o + cut, best_open, best_slack, ell_next, r_next, s_next,
                            )
                            if bound < self.need:
                                continue

                            for parts in spread_partitions(bout, bound - self.need):
                                group = rest_weights + list(parts)
                                slack_lb = slack_c + stretch_rest + other_look + _lookahead([group])
                                new_open = tuple(remaining) + tuple((J, w) for w in parts)
                                if self._degree_bound(
                                    J + 1, sum_o + cut, new_open, slack_lb, ell_next, r_next, s_next,
                                ) < self.need:
                                    continue
                                self._place(
                                    J + 1, ell_next, r_next, s_next, t_rem - snk, new_floor,
                                    new_edges, new_open, new_comp, sum_o + cut, slack_c,
                                )
