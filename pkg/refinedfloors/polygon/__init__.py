"""PolygonToolkit - Facade for lattice polygon combinatorics"""
import json
import logging
from pathlib import Path
from typing import Optional, Sequence, Union

from errors import MalformedPolygon

from .lattice_polygon import (
    LatticePolygon, parse_polygon, lattice_length, primitive, area2,
    boundary_count, interior_count,
)
from .h_transverse import HTransverseData, h_transverse_data, divergence_bound, vertex_indices
from .hypotheses import (
    TheoremSelector, InequalityCheck, HypothesisReport, check_hypotheses,
    select_theorem, max_valid_codegree, is_cp2_triangle,
)
from .transforms import (
    apply_unimodular, blow_up_corner, cp2_triangle, rectangle, delta_ab,
    delta_ab_prime, DELTA_AB_MATRIX,
)

logger = logging.getLogger(__name__)


def load_polygon(source: str) -> LatticePolygon:
    """
    Load a polygon from inline JSON or from a JSON file path.

    Accepts either {"vertices": [[x,y], ...]} or a bare list of pairs.

    Args:
        source: JSON text or path to a JSON file

    Returns:
        Canonical LatticePolygon

    Raises:
        MalformedPolygon: the JSON has neither shape
    """
    text = source
    candidate = Path(source)
    if not source.lstrip().startswith(("{", "[")) and candidate.is_file():
        text = candidate.read_text(encoding="utf-8")
    payload = json.loads(text)
    if isinstance(payload, dict):
        if "vertices" not in payload:
            raise MalformedPolygon(f"polygon object has no \"vertices\" key (keys: {sorted(payload)})")
        payload = payload["vertices"]
    if not isinstance(payload, list) or not all(isinstance(p, (list, tuple)) for p in payload):
        raise MalformedPolygon("polygon must be a list of [x, y] pairs")
    return parse_polygon(payload)


class PolygonToolkit:
    """
    Facade for polygon_core.
    Holds one polygon together with its lazily computed h-transverse data.
    """

    def __init__(self, polygon: Union[LatticePolygon, Sequence]):
        """
        Initialize the toolkit.

        Args:
            polygon: A LatticePolygon or a raw vertex list
        """
        self.polygon = polygon if isinstance(polygon, LatticePolygon) else parse_polygon(polygon)
        self._data: Optional[HTransverseData] = None

    @property
    def data(self) -> HTransverseData:
        """h-transverse data (raises NotHTransverse for polygons outside the class)"""
        if self._data is None:
            self._data = h_transverse_data(self.polygon)
        return self._data

    def hypotheses(self, i: int, s: int, which: Optional[TheoremSelector] = None) -> Optional[HypothesisReport]:
        """
        Check the hypotheses of the selected (or automatically chosen) statement.

        Returns:
            HypothesisReport, or None if no statement covers this polygon
        """
        which = which or select_theorem(self.data)
        if which is None:
            logger.info(f"[PolygonToolkit] no universality statement covers {list(self.polygon.vertices)}")
            return None
        return check_hypotheses(self.data, i, s, which)

    def blow_up(self, b: int, m: int = 1) -> "PolygonToolkit":
        return PolygonToolkit(blow_up_corner(self.polygon, b, m))

    def transform(self, m, t=(0, 0)) -> "PolygonToolkit":
        return PolygonToolkit(apply_unimodular(self.polygon, m, t))


# Export public API
__all__ = [
    'PolygonToolkit', 'LatticePolygon', 'HTransverseData', 'TheoremSelector',
    'InequalityCheck', 'HypothesisReport',
    'parse_polygon', 'load_polygon', 'h_transverse_data', 'divergence_bound',
    'vertex_indices', 'check_hypotheses', 'select_theorem', 'max_valid_codegree',
    'is_cp2_triangle', 'apply_unimodular', 'blow_up_corner',
    'lattice_length', 'primitive', 'area2', 'boundary_count', 'interior_count',
    'cp2_triangle', 'rectangle', 'delta_ab', 'delta_ab_prime', 'DELTA_AB_MATRIX',
]
