"""Pydantic request/response models for the HTTP service.

These mirror the JSON documents of :mod:`framekit.modelio`; requests are
validated structurally here, then converted through the same loader the CLI
uses so both front ends accept exactly the same documents.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from .. import modelio
from ..model import FrameModel


class SectionIn(BaseModel):
    E: float
    nu: float
    A: float
    Iy: float
    Iz: float
    J: float
    I_rho: float | None = None


class ElementIn(BaseModel):
    i: int
    j: int
    section: SectionIn
    local_z: tuple[float, float, float] | None = None


class SupportIn(BaseModel):
    flags: tuple[bool, bool, bool, bool, bool, bool]
    values: tuple[float, float, float, float, float, float] | None = None


class FrameModelIn(BaseModel):
    """The frame-model document (see the model JSON schema)."""

    nodes: list[tuple[float, float, float]]
    elements: list[ElementIn]
    boundary: dict[int, tuple[bool, bool, bool, bool, bool, bool] | SupportIn] = {}
    loads: dict[int, tuple[float, float, float, float, float, float]] = {}

    def to_frame_model(self) -> FrameModel:
        return modelio.model_from_dict(self.model_dump(exclude_none=True))


class SolverSettingsIn(BaseModel):
    condition_limit: float = 1e16
    eig_positivity_floor: float = 1e-10
    complex_tolerance: float = 1e-8


class StaticRequest(BaseModel):
    model: FrameModelIn
    settings: SolverSettingsIn = Field(default_factory=SolverSettingsIn)


class BucklingRequest(BaseModel):
    model: FrameModelIn
    settings: SolverSettingsIn = Field(default_factory=SolverSettingsIn)


class StaticReport(BaseModel):
    schema_version: int
    analysis: str
    settings: SolverSettingsIn
    num_nodes: int
    displacements: list[list[float]]
    reactions: list[list[float]]


class BucklingReport(BaseModel):
    schema_version: int
    analysis: str
    settings: SolverSettingsIn
    num_nodes: int
    lambda_cr: float
    mode: list[list[float]]


class Mesh1DRequest(BaseModel):
    x_min: float
    x_max: float
    num_elements: int


class Mesh1DReport(BaseModel):
    node_coords: list[float]
    connectivity: list[tuple[int, int]]


class Mesh2DRequest(BaseModel):
    kind: str  # "tri6" or "quad8"
    x_lo: float = 0.0
    y_lo: float = 0.0
    x_hi: float = 1.0
    y_hi: float = 1.0
    nx: int = 1
    ny: int = 1


class Mesh2DReport(BaseModel):
    coords: list[tuple[float, float]]
    connectivity: list[list[int]]
    kind: str


class ElasticStiffnessRequest(BaseModel):
    E: float
    nu: float
    A: float
    L: float
    Iy: float
    Iz: float
    J: float


class GeometricStiffnessRequest(BaseModel):
    L: float
    A: float
    I_rho: float
    Fx2: float = 0.0
    Mx2: float = 0.0
    My1: float = 0.0
    Mz1: float = 0.0
    My2: float = 0.0
    Mz2: float = 0.0


class TransformationRequest(BaseModel):
    p_i: tuple[float, float, float]
    p_j: tuple[float, float, float]
    local_z: tuple[float, float, float] | None = None


class MatrixReport(BaseModel):
    kind: str
    shape: list[int]
    matrix: list[list[float]]


class ErrorBody(BaseModel):
    error: str
    detail: str


class HealthReport(BaseModel):
    status: str
    version: str
