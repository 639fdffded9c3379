"""HTransverseData - combinatorics attached to an h-transverse polygon"""
import logging
from collections import Counter
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field

from errors import NotHTransverse
from .lattice_polygon import (
    LatticePolygon, area2, det, lattice_length, primitive,
)

logger = logging.getLogger(__name__)


class HTransverseData(BaseModel):
    """Floor-diagram combinatorics of an h-transverse polygon."""
    model_config = ConfigDict(frozen=True)

    vertices: List[List[int]] = Field(description="Canonical vertex list of the source polygon")
    a: int = Field(description="Height of the polygon, i.e. the number of floors")
    e_top: int = Field(description="Lattice length of the top horizontal edge (0 if absent)")
    e_bot: int = Field(description="Lattice length of the bottom horizontal edge (0 if absent)")
    L: List[int] = Field(description="Left-side directions k of (k,-1), with multiplicity, sorted")
    R: List[int] = Field(description="Right-side directions k of (k,-1), with multiplicity, sorted")
    y: int = Field(description="Number of boundary lattice points")
    chi: int = Field(description="Number of vertices")
    interior: int = Field(description="Number of interior lattice points")
    n_k: Dict[int, int] = Field(description="Vertex count per index |det(u,v)|")
    d_F: int = Field(description="Bound on |div| for every floor diagram")
    s_max: int = Field(description="Largest admissible pairing order")
    edge_lengths: List[int] = Field(description="Lattice lengths of the edges, counterclockwise")
    area2: int = Field(description="Twice the area")

    @property
    def min_edge_length(self) -> int:
        return min(self.edge_lengths)

    @property
    def is_non_singular(self) -> bool:
        return all(k == 1 for k in self.n_k)

    @property
    def vertical_ray_count(self) -> int:
        return int(self.e_top > 0) + int(self.e_bot > 0)

    def singular_counts(self, up_to: int) -> Dict[int, int]:
        """n_1 ... n_up_to with zeros filled in."""
        return {k: self.n_k.get(k, 0) for k in range(1, up_to + 1)}


def vertex_indices(polygon: LatticePolygon) -> List[int]:
    """Index |det(u, v)| of every vertex, u and v the primitive directions of its edges."""
    vectors = polygon.edge_vectors()
    n = len(vectors)
    # vertex k sits between edge k-1 (incoming) and edge k (outgoing)
    return [abs(det(primitive(vectors[k - 1]), primitive(vectors[k]))) for k in range(n)]


def side_directions(polygon: LatticePolygon) -> Dict[str, List[int]]:
    """
    Split the boundary into its left and right sides.

    Returns:
        {"left": [...], "right": [...]} with one k per unit of lattice length,
        listed top to bottom, where (k, -1) is the downward primitive direction

    Raises:
        NotHTransverse: an edge direction is neither (±1,0) nor (n,±1)
    """
    left: List[int] = []
    right_bottom_up: List[int] = []
    for vector in polygon.edge_vectors():
        px, py = primitive(vector)
        length = lattice_length(vector)
        if py == 0:
            continue
        if abs(py) != 1:
            raise NotHTransverse(
                f"edge direction {(px, py)} is neither (±1,0) nor (n,±1)"
            )
        if py < 0:
            # counterclockwise walks the left side downward
            left.extend([px] * length)
        else:
            # and the right side upward; reversing gives direction (-px, -1)
            right_bottom_up.extend([-px] * length)
    return {"left": left, "right": list(reversed(right_bottom_up))}


def _divergence_bound(L: List[int], R: List[int]) -> int:
    """d_F = max(|max R - min L|, |min R - max L|)."""
    return max(abs(max(R) - min(L)), abs(min(R) - max(L)))


def h_transverse_data(polygon: LatticePolygon) -> HTransverseData:
    """
    Compute every combinatorial quantity of an h-transverse polygon.

    Args:
        polygon: Canonical LatticePolygon

    Returns:
        HTransverseData with all fields populated

    Raises:
        NotHTransverse: the polygon is outside the h-transverse class
    """
    sides = side_directions(polygon)
    e_top = 0
    e_bot = 0
    lengths = []
    for vector in polygon.edge_vectors():
        length = lattice_length(vector)
        lengths.append(length)
        if vector[1] == 0:
            if vector[0] > 0:
                e_bot = length
            else:
                e_top = length

    L = sorted(sides["left"])
    R = sorted(sides["right"])
    a = len(L)
    if a != len(R) or a == 0:
        raise NotHTransverse(f"left and right sides disagree on the height ({len(L)} vs {len(R)})")

    y = sum(lengths)
    if y != e_top + e_bot + 2 * a:
        raise NotHTransverse(f"boundary count {y} does not split as e_top + e_bot + 2a")

    twice_area = area2(polygon)
    interior = (twice_area - y + 2) // 2
    indices = vertex_indices(polygon)

    data = HTransverseData(
        vertices=[list(v) for v in polygon.vertices],
        a=a,
        e_top=e_top,
        e_bot=e_bot,
        L=L,
        R=R,
        y=y,
        chi=len(polygon.vertices),
        interior=interior,
        n_k=dict(sorted(Counter(indices).items())),
        d_F=_divergence_bound(L, R),
        s_max=(y - 1) // 2,
        edge_lengths=lengths,
        area2=twice_area,
    )
    logger.debug(f"[h_transverse_data] a={a} y={y} chi={data.chi} interior={interior} d_F={data.d_F}")
    return data


def divergence_bound(d: HTransverseData) -> int:
    """
    Bound d_F on |div(v)| = |r(v) - l(v)| over all floor diagrams of the polygon.

    Computed from the extreme left and right directions only; the dual fan
    is never built.
    """
    return _divergence_bound(d.L, d.R)
