"""Pydantic request/response models for the HTTP surface.

Trees travel in the canonical JSON shape used everywhere else
({"vertices": [...], "edges": [...]}); the models here only type the
envelopes, leaving tree parsing to the serialization module so there is a
single parser to test.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field


class TreeEnvelope(BaseModel):
    vertices: list[dict[str, Any]]
    edges: list[dict[str, Any]]


class ValidateRequest(BaseModel):
    tree: TreeEnvelope
    target: Literal["sliced", "pruned"] = "pruned"


class ViolationModel(BaseModel):
    clause: str
    where: str
    detail: str


class ValidateResponse(BaseModel):
    ok: bool
    violations: list[ViolationModel]
    tsm_stable: bool | None = None
    pruned_stable: bool | None = None
    height: str | None = None
    sum_weights: str | None = None
    canonical_key: str | None = None


class PruneRequest(BaseModel):
    tree: TreeEnvelope
    policy: str = "id"  # "id" | "rounds"
    order: list[str] | None = None  # explicit leaf sequence overrides policy
    snapshots: bool = True


class PruneResponse(BaseModel):
    input: TreeEnvelope
    events: list[dict[str, Any]]
    final: TreeEnvelope
    rounds: int
    final_key: str


class EnumerateRequest(BaseModel):
    height: int = Field(ge=1)
    target: Literal["sliced", "pruned"]
    max_entries: int = 10_000
    max_vertices: int = 40


class EnumerateResponse(BaseModel):
    census: dict[str, Any]
    cap_exceeded: bool = False
    cap_message: str | None = None


class PointModel(BaseModel):
    label: str
    ordA: int = Field(ge=0)
    ordB: int = Field(ge=0)
    ordDelta: int | None = None


class ProfileModel(BaseModel):
    n: int = Field(ge=0)
    points: list[PointModel]


class ClassifyRequest(BaseModel):
    profile: ProfileModel


class ClassifyResponse(BaseModel):
    points: list[dict[str, Any]]
    strictly_lc_count: int
    minimal_profile: ProfileModel | None = None
    not_lc_reason: str | None = None


class FormulasResponse(BaseModel):
    n: int
    window: str
    ksb_volume: str
    dimension: int
    eps: str | None = None
    c_eps: str | None = None
    v_eps: str | None = None


class DotRequest(BaseModel):
    tree: TreeEnvelope
    name: str = "tree"


class DotResponse(BaseModel):
    dot: str


class ErrorResponse(BaseModel):
    error: str
    detail: str
