"""Pydantic models for every JSON document the CLI emits."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class RootSystemPayload(BaseModel):
    type: str
    rank: int
    cartan_matrix: List[List[int]]
    positive_roots: List[List[int]]
    count: int


class ParabolicPayload(BaseModel):
    type: str
    rank: int
    marked_root: int
    phi_1: List[List[int]]
    phi_n_plus: List[List[int]]
    complex_dimension: int


class ComponentPayload(BaseModel):
    type: str
    rank: int


class DeletionPayload(BaseModel):
    type: str
    rank: int
    removed: List[int]
    components: List[ComponentPayload]


class DimensionPayload(BaseModel):
    type: str
    rank: int
    weight: List[int]
    dimension: int
    tableau_dimension: Optional[int] = None


class IrrepPayload(BaseModel):
    weight: List[int]
    dimension: int


class IrrepListPayload(BaseModel):
    type: str
    rank: int
    bound: int
    irreps: List[IrrepPayload]


class SchubertPayload(BaseModel):
    index: List[int]
    ambient: List[int]
    k: int
    degree: int
    oracle_degree: int


class PairPayload(BaseModel):
    m_plus: str
    m_minus: str
    constraint: str


class HSSPayload(BaseModel):
    kind: str
    params: List[int]
    dim_C: int
    projective_rank: int
    min_degree: List[int]
    pairs: List[PairPayload]
    count: int


class ConsistencyCheckPayload(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class ConsistencyPayload(BaseModel):
    checks: List[ConsistencyCheckPayload]
    flags: List[str]
    violations: int


class PlueckerPayload(BaseModel):
    map_name: str
    ambient: str
    degree: int
    membership_checks: Dict[str, bool] = Field(default_factory=dict)


class CheckEntry(BaseModel):
    check_id: str
    anchor: str
    status: str
    detail: str = ""


class VerifySummary(BaseModel):
    total: int
    passed: int = Field(alias="pass")
    failed: int = Field(alias="fail")

    model_config = {"populate_by_name": True}


class VerifyReport(BaseModel):
    scope: str
    entries: List[CheckEntry]
    summary: VerifySummary

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0
