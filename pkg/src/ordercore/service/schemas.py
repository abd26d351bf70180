"""Request and response models for the HTTP service."""

from typing import Optional

from pydantic import BaseModel, Field, model_validator


class SessionCreate(BaseModel):
    """A new graph session: edges as pairs or as edge-list text."""

    edges: Optional[list[tuple[int, int]]] = None
    edge_text: Optional[str] = None
    engine: str = Field(default="order", pattern="^(order|traversal|oracle)$")
    heuristic: str = Field(default="small", pattern="^(small|large|random)$")
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _one_source(self):
        if self.edges is not None and self.edge_text is not None:
            raise ValueError("give either edges or edge_text, not both")
        return self


class SessionInfo(BaseModel):
    session_id: str
    engine: str
    n: int
    m: int
    max_core: int


class EdgeUpdate(BaseModel):
    u: int
    v: int


class UpdateResponse(BaseModel):
    """Outcome of one edge insert or remove."""

    direction: str
    k: int
    vstar: list[int]
    vstar_size: int
    visited_size: int
    elapsed_micros: int


class CoreResponse(BaseModel):
    cores: dict[int, int]


class VertexCoreResponse(BaseModel):
    vertex: int
    core: int


class ValidateResponse(BaseModel):
    ok: bool
    detail: str = ""
