"""Pydantic models mirroring the canonical JSON payloads of the service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class OpponentsModel(BaseModel):
    mode: Literal["all", "players", "class"]
    players: list[str]
    bowler_class: Optional[str] = None


class RankedFeatureModel(BaseModel):
    feature: str
    score: float


class RuleModel(BaseModel):
    kind: Literal["strength", "weakness", "other"]
    analysis_type: Literal["batting", "bowling"]
    anchor: str
    category: str
    sentence: str
    ranked: list[RankedFeatureModel]


class RulesModel(BaseModel):
    strength: Optional[RuleModel] = None
    weakness: Optional[RuleModel] = None
    others: list[RuleModel]
    unobserved_anchors: list[str]


class BiplotPointModel(BaseModel):
    label: str
    side: Literal["row", "column"]
    category: str
    x: float
    y: float
    mass: float


class BiplotModel(BaseModel):
    category: str
    points: list[BiplotPointModel]


class ProvenanceModel(BaseModel):
    player: str
    analysis_type: Literal["batting", "bowling"]
    opponents: OpponentsModel
    date_from: Optional[str] = None
    date_to: Optional[str] = None
    top_k: int
    corpus_digest: str
    cm_digest: str
    records_selected: int
    records_unmatched: int
    excluded_opponents: list[str]
    excluded_deliveries: int
    n: int
    row_labels: list[str]
    col_labels: list[str]
    dropped_rows: list[str]
    dropped_cols: list[str]
    singular_values: list[float]
    rank: int
    rank_deficient: bool
    inertia: float
    chi_square: float


class AnalysisResponseModel(BaseModel):
    provenance: ProvenanceModel
    rules: RulesModel
    biplots: dict[str, BiplotModel]


class PlayerEntryModel(BaseModel):
    player: str
    batting_deliveries: int = Field(ge=0)
    bowling_deliveries: int = Field(ge=0)


class HealthModel(BaseModel):
    status: Literal["ok"]
    records: int
    players: int
    date_from: str
    date_to: str


class ErrorBodyModel(BaseModel):
    code: str
    message: str


class ErrorModel(BaseModel):
    error: ErrorBodyModel
