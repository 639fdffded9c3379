"""Result records of the invariant engine"""
from typing import List, Optional

from pydantic import BaseModel, Field


class InvariantResult(BaseModel):
    """G_Delta(s) together with its codegree coefficients"""
    polygon: List[List[int]]
    s: int
    pairing: List[List[int]]
    G: List[List] = Field(description="SymLaurent JSON: [[u-exponent, \"coefficient\"], ...]")
    degree: int = Field(description="q-degree of G (number of interior points)")
    coefficients_by_codegree: List[int] = Field(description="<G>_0, <G>_1, ... read from the tilde transform")


class VerificationReport(BaseModel):
    """Enumerated coefficient against the universal polynomial"""
    polygon: List[List[int]]
    s: int
    i: int
    polynomial: str = Field(description="P for non-singular polygons, Q otherwise")
    formula: str = Field(description="The universal polynomial as text")
    enumerated: int
    universal: int
    equal: bool
    theorem: Optional[str] = Field(default=None, description="Statement whose hypotheses were tested")
    hypotheses_hold: bool
    failing: Optional[str] = Field(default=None, description="First failing hypothesis")

    @property
    def consistent(self) -> bool:
        """False only when the hypotheses hold and the two sides differ."""
        return self.equal or not self.hypotheses_hold


class TildeIdentityReport(BaseModel):
    """tilde(G) against A0^s A1^(y-2-2s) G* up to the degree of G"""
    polygon: List[List[int]]
    s: int
    pairing: List[List[int]]
    order: int
    tilde_G: List[int]
    product: List[int]
    star: List[int] = Field(description="Coefficients of G* (t^0 upwards)")
    equal: bool


class StarCheckReport(BaseModel):
    """G* against the denominator-free universal series below t^i_m"""
    polygon: List[List[int]]
    s: int
    theorem: Optional[str] = None
    i_m: int = Field(description="Largest i for which the statement's hypotheses hold (-1 if none)")
    applicable: bool
    star: List[int] = Field(default_factory=list)
    universal: List[int] = Field(default_factory=list)
    equal: bool


class BlowupTerm(BaseModel):
    """p(k/m) |C_(i-k)(Delta)| for one k divisible by m"""
    k: int
    partitions: int
    classes: int


class BlowupCardinalityReport(BaseModel):
    """|C_i| of a corner cut against the partition-weighted counts of the original"""
    original: List[List[int]]
    blown_up: List[List[int]]
    b: int
    m: int
    i: int
    lhs: int = Field(description="|C_i| of the blown-up polygon")
    rhs: int
    terms: List[BlowupTerm]
    equal: bool
    hypotheses_hold: bool = Field(description="Both polygons satisfy the star conditions at i")
