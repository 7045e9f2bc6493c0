"""
Document Models

Pydantic models for the JSON documents read and written by the CLI:
quandle tables, cochains, surface-braid presentations, group-ring values
and the cohomology and invariant reports.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from quandle_lab.algebra.group_ring import GroupRingElement
from quandle_lab.cohomology.cochains import Cochain
from quandle_lab.cohomology.groups import CohomologyGroup, HomologyGroup
from quandle_lab.quandle.core import Quandle, verify_quandle
from quandle_lab.surfaces.presentation import SurfaceBraidPresentation


class QuandleDocument(BaseModel):
    """{"n": int, "op": [[int]]}"""

    n: int = Field(ge=1)
    op: List[List[int]]
    name: str = ""

    def to_quandle(self, allow_rack: bool = False) -> Quandle:
        """
        Raises:
            ValueError: If op is not n×n
            QuandleAxiomError: If an axiom fails
        """
        if len(self.op) != self.n:
            raise ValueError(f"Expected {self.n} rows in 'op', got {len(self.op)}")
        return verify_quandle(self.op, name=self.name, allow_rack=allow_rack)

    @classmethod
    def from_quandle(cls, quandle: Quandle) -> "QuandleDocument":
        return cls(n=quandle.n, op=[list(row) for row in quandle.op], name=quandle.name)


class CochainDocument(BaseModel):
    degree: int = Field(ge=1)
    coeff: str = "Z"
    values: Dict[str, int] = Field(default_factory=dict)
    quandle_flag: bool = True

    def to_cochain(self) -> Cochain:
        return Cochain.from_json(self.model_dump())


class RelationEntry(BaseModel):
    w: List[int] = Field(default_factory=list)
    k: int
    eps: int


class WhiteVertexEntry(BaseModel):
    beta: List[int] = Field(default_factory=list)
    i: int
    eps: int


class PresentationDocument(BaseModel):
    """Surface braid: degree, braid system and white vertices"""

    degree: int = Field(ge=1)
    relations: List[RelationEntry] = Field(default_factory=list)
    white_vertices: List[WhiteVertexEntry] = Field(default_factory=list)

    def to_presentation(self, name: str = "") -> SurfaceBraidPresentation:
        return SurfaceBraidPresentation.from_json(self.model_dump(), name=name)


class GroupRingDocument(BaseModel):
    coeff: str = "Z"
    terms: Dict[str, int] = Field(default_factory=dict)

    @classmethod
    def from_element(cls, element: GroupRingElement) -> "GroupRingDocument":
        return cls.model_validate(element.to_json())

    def to_element(self) -> GroupRingElement:
        return GroupRingElement.from_json(self.model_dump())


class CohomologyReport(BaseModel):
    """Cohomology or homology group as printed by the CLI"""

    quandle: str
    degree: int
    theory: str
    coeff: str
    group: str
    summands: List[int] = Field(default_factory=list)
    variant: Optional[str] = None
    free_rank: Optional[int] = None
    torsion: Optional[List[int]] = None
    representatives: Optional[List[Dict[str, object]]] = None

    @classmethod
    def from_cohomology(
        cls, group: CohomologyGroup, representatives: bool = False
    ) -> "CohomologyReport":
        data = group.to_json()
        if not representatives:
            data.pop("representatives")
        return cls.model_validate(data)

    @classmethod
    def from_homology(cls, group: HomologyGroup) -> "CohomologyReport":
        data = group.to_json()
        summands = list(group.torsion) + [0] * group.free_rank
        return cls.model_validate({**data, "coeff": "Z", "summands": summands})


class InvariantReport(BaseModel):
    """
    Result of a knot or surface state sum

    colorings always equals the total multiplicity of result.
    """

    input: str
    quandle: str
    cocycle: str
    coeff: str
    colorings: int
    result: GroupRingDocument
    display: str
    elapsed_seconds: Optional[float] = None

    @classmethod
    def build(
        cls,
        source: str,
        quandle: Quandle,
        cocycle_name: str,
        value: GroupRingElement,
        elapsed_seconds: Optional[float] = None,
    ) -> "InvariantReport":
        document = GroupRingDocument.from_element(value)
        return cls(
            input=source,
            quandle=quandle.name,
            cocycle=cocycle_name,
            coeff=document.coeff,
            colorings=value.total(),
            result=document,
            display=str(value),
            elapsed_seconds=elapsed_seconds,
        )
