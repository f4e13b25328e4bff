"""Pydantic request/response models for the HTTP service.

These mirror the documented JSON formats (see docs/formats.md): bondle and
weight documents round-trip through ``FiniteBondle.to_json`` /
``BoltzmannWeights.to_json``, diagrams travel as .bgc text.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Table = list[list[int]]


class AffineProvenance(BaseModel):
    a: int
    b: int
    m: Optional[int] = None


class BondleDoc(BaseModel):
    n: int
    star: Table
    starbar: Table
    r1: Table
    r2: Table
    r3: Optional[Table] = None
    affine: Optional[AffineProvenance] = None


class ConstantProvenance(BaseModel):
    a: int
    b: int


class WeightsDoc(BaseModel):
    m: int
    phi: Table
    phi1: Table
    phi2: Table
    constant: Optional[ConstantProvenance] = None


class Violation(BaseModel):
    axiom: str
    witness: list[int]


class AxiomReportDoc(BaseModel):
    passed: bool
    violations: list[Violation]


class AffineParams(BaseModel):
    """Parameters for building an affine bondle on Z_n."""

    n: int
    a: int
    b: int
    m: Optional[int] = None


class CheckRequest(BaseModel):
    """Check axioms of a bondle given either explicit tables or affine parameters."""

    bondle: Optional[BondleDoc] = None
    affine: Optional[AffineParams] = None
    level: Literal["quandle", "singquandle", "bondle", "auto"] = "auto"


class CheckResponse(BaseModel):
    level: Literal["quandle", "singquandle", "bondle"]
    report: AxiomReportDoc
    bondle: BondleDoc


class WeightsCheckRequest(BaseModel):
    bondle: BondleDoc
    weights: WeightsDoc


class WeightsCheckResponse(BaseModel):
    report: AxiomReportDoc


class ColorRequest(BaseModel):
    diagram: str = Field(description="Diagram in .bgc text form")
    bondle: BondleDoc
    engine: Literal["backtrack", "affine", "both"] = "backtrack"
    enumerate: bool = False
    limit: int = 1000


class EngineTiming(BaseModel):
    engine: Literal["backtrack", "affine"]
    count: int
    seconds: float


class ColorResponse(BaseModel):
    count: int
    engines: list[EngineTiming]
    colorings: Optional[list[list[int]]] = None
    truncated: bool = False


class StateSumRequest(BaseModel):
    diagram: str
    bondle: BondleDoc
    weights: WeightsDoc


class StateSumResponse(BaseModel):
    m: int
    coeffs: list[int]
    rendered: str
    colorings: int


class ClusterRequest(BaseModel):
    diagrams: dict[str, str] = Field(description="name -> .bgc text")
    bondle: BondleDoc
    weights: WeightsDoc


class ClusterResponse(BaseModel):
    stage1: dict[str, list[str]]
    stage2: dict[str, list[str]]
    distinguished_pairs: list[list[str]]


class MovesRequest(BaseModel):
    diagram: str
    bondle: BondleDoc
    weights: Optional[WeightsDoc] = None
    moves: int = 100
    seed: int = 0


class MovesFailure(BaseModel):
    step: int
    move: str
    diagram: str
    count: int
    rendered: Optional[str] = None


class MovesResponse(BaseModel):
    applied: int
    count: int
    rendered: Optional[str] = None
    invariant: bool
    failures: list[MovesFailure]


class SearchBondlesRequest(BaseModel):
    n: int
    with_r3: bool = True


class SearchBondlesResponse(BaseModel):
    triples: list[AffineParams]
    checked: int


class SearchWeightsRequest(BaseModel):
    bondle: BondleDoc
    m: int
    budget: int = 1_000_000


class SearchWeightsResponse(BaseModel):
    solutions: list[WeightsDoc]
    truncated: bool


class HealthResponse(BaseModel):
    status: Literal["ok"]
    version: str
