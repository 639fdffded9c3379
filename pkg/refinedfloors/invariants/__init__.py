"""InvariantToolkit - Facade for marking sums, refined invariants and their verification"""
import logging
from typing import Dict, List, Optional, Tuple

from diagrams import DiagramClass, DiagramToolkit
from polygon import HTransverseData
from qpoly import SymLaurent, TPoly
from .pairing import Pairing, default_pairing, validate_pairing
from .marking_poset import (
    MarkingPoset, CountRules, RefinedRules, StarRules, pair_shape, count_markings,
    multiplicity_tilde, sum_multiplicities, star_multiplicities,
)
from .oracle import count_markings_oracle, sum_multiplicities_oracle
from .reports import (
    InvariantResult, VerificationReport, TildeIdentityReport, StarCheckReport,
    BlowupTerm, BlowupCardinalityReport,
)
from .engine import (
    map_classes, resolve_pairing, refined_from_classes, refined_invariant, invariant_result,
    invariant_coeff, welschinger_specialization, star_from_classes, star_invariant,
    tilde_identity_check, universal_value, verify_universal, verify_star,
    blowup_cardinality_check,
)
from .lemma_suite import LemmaResult, run_lemma_suite, operation_corpus

logger = logging.getLogger(__name__)


class InvariantToolkit:
    """
    Facade for invariant_engine.
    Shares one DiagramToolkit so repeated queries on a polygon enumerate once.
    """

    def __init__(self, data: HTransverseData, budget: Optional[int] = None, threads: Optional[int] = None):
        """
        Initialize the toolkit.

        Args:
            data: Polygon data
            budget: Node budget for enumerations
            threads: Worker threads for per-diagram sums (None: REFINED_FLOOR_THREADS or cpu count)
        """
        self.data = data
        self.threads = threads
        self.diagrams = DiagramToolkit(data, budget)
        self._refined: Dict[Tuple, SymLaurent] = {}

    def pairing(self, s: int, pairs=None) -> Pairing:
        return resolve_pairing(self.data, s, pairs)

    def refined(self, s: int, pairs=None) -> SymLaurent:
        """G_Delta(s), cached per pairing."""
        S = self.pairing(s, pairs)
        if S.pairs not in self._refined:
            self._refined[S.pairs] = refined_from_classes(self.diagrams.classes(), S, self.threads)
        return self._refined[S.pairs]

    def coefficient(self, s: int, i: int, pairs=None) -> int:
        """<G_Delta(s)>_i from codegree-bounded diagrams."""
        S = self.pairing(s, pairs)
        total = 0
        for c in self.diagrams.classes(i):
            need = i - c.codegree
            total += multiplicity_tilde(c, S, limit=need + 1).coeff(need)
        return total

    def star(self, s: int, pairs=None) -> TPoly:
        return star_from_classes(self.diagrams.classes(), self.pairing(s, pairs), self.data.interior, None, self.threads)

    def markings(self) -> List[Tuple[DiagramClass, int]]:
        """Every class with its number of markings."""
        return [(c, count_markings(c)) for c in self.diagrams.classes()]

    def welschinger(self, s: int) -> Tuple[int, int]:
        G = self.refined(s)
        return G.evaluate(1), G.evaluate(-1)

    def verify(self, s: int, i: int) -> VerificationReport:
        return verify_universal(self.data, s, i, self.diagrams.budget, self.threads)

    def tilde_identity(self, s: int, pairs=None) -> TildeIdentityReport:
        return tilde_identity_check(self.data, s, pairs, self.diagrams.budget, self.threads)

    def verify_star(self, s: int) -> StarCheckReport:
        return verify_star(self.data, s, self.diagrams.budget, self.threads)

    def blowup(self, b: int, m: int, i: int) -> BlowupCardinalityReport:
        return blowup_cardinality_check(self.data, b, m, i, self.diagrams.budget)


# Export public API
__all__ = [
    'InvariantToolkit', 'Pairing', 'MarkingPoset', 'CountRules', 'RefinedRules', 'StarRules',
    'InvariantResult', 'VerificationReport', 'TildeIdentityReport', 'StarCheckReport',
    'BlowupTerm', 'BlowupCardinalityReport', 'LemmaResult',
    'default_pairing', 'validate_pairing', 'resolve_pairing', 'pair_shape',
    'count_markings', 'multiplicity_tilde', 'sum_multiplicities', 'star_multiplicities',
    'count_markings_oracle', 'sum_multiplicities_oracle',
    'map_classes', 'refined_from_classes', 'refined_invariant', 'invariant_result', 'invariant_coeff',
    'welschinger_specialization', 'star_from_classes', 'star_invariant', 'tilde_identity_check',
    'universal_value', 'verify_universal', 'verify_star', 'blowup_cardinality_check',
    'run_lemma_suite', 'operation_corpus',
]
