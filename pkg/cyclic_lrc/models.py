"""
Report records shared by the library and the CLI.

All records are pydantic models so that reports survive a JSON round trip unchanged.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from cyclic_lrc.construction import ConstructionParams

SCHEMA_VERSION = 1


class HTWitness(BaseModel):
    """
    A Hartmann-Tzeng witness: the exponents u + s1 * z1 + s2 * z2, 0 <= s1 <= delta - 2,
    0 <= s2 <= gamma, all lie in the defining set and z1, z2 are units mod n.
    """
    model_config = ConfigDict(frozen=True)

    u: int
    z1: int
    z2: int
    delta: int
    gamma: int

    @property
    def bound(self) -> int:
        return self.delta + self.gamma


class BoundReport(BaseModel):
    bch: int
    bch_witness: HTWitness
    ht: int
    ht_witness: HTWitness
    product: int
    singleton_like: List[int]
    singleton_like_min: Optional[int] = None
    distance_determined: bool = False
    singleton_optimal: bool = False
    thm4: Optional[int] = None
    xi: Optional[int] = None
    v: Optional[int] = None
    rect: Optional[int] = None
    rect_sides: List[int] = []


class GroupCheck(BaseModel):
    """
    Verified local distance of one repair group A_{i,j}.
    """
    partition: int
    group: int
    positions: List[int]
    bound: int
    exact: bool
    method: str
    passed: bool


class AvailabilityReport(BaseModel):
    r: List[int]
    rho: List[int]
    strongly_orthogonal: bool
    groups: List[GroupCheck]
    passed: bool


class DistanceResult(BaseModel):
    lower: int
    upper: int
    exact: bool
    method: str
    evaluations: int


class SearchResult(BaseModel):
    dg: List[int]
    ht: int
    k: int
    examined: int
    witness: Optional[HTWitness] = None


class Table1Row(BaseModel):
    row: int
    n: int
    n1: int
    n2: int
    dg: List[int]
    q: int
    ht: int
    k: int
    bound: int
    printed_ht: int
    printed_k: int
    printed_bound: int
    matches: bool
    attains_bound: bool


class FieldInfo(BaseModel):
    p: int
    m: int
    q: int
    modulus: List[int]
    primitive_element: int


class CodeReport(BaseModel):
    """
    Everything known about one constructed code.
    """
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias='schema')
    params: ConstructionParams
    field: FieldInfo
    n: int
    k: int
    defining_set: Dict[str, List[int]]
    generator_poly: List[int]
    bounds: BoundReport
    availability: Optional[AvailabilityReport] = None
    distance: Optional[DistanceResult] = None
