"""Request/response schemas for the HTTP service (and the in-process CLI)."""
from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class RingSpecModel(BaseModel):
    """JSON table form of a finite *-ring."""

    order: int
    add: list[list[int]]
    mul: list[list[int]]
    zero: int
    one: int
    involution: list[int]
    labels: list[str] | None = None

    def to_spec(self) -> dict:
        return self.model_dump(exclude_none=True)


class RingRef(BaseModel):
    hash: str
    order: int


class RingSource(BaseModel):
    """One ring, given either as a constructor expression or as raw tables.

    The wire name of the expression field is ``construct``; the Python
    attribute is ``construct_expr`` (pydantic reserves ``construct``).
    """

    model_config = ConfigDict(populate_by_name=True)

    construct_expr: str | None = Field(default=None, alias="construct")
    spec: RingSpecModel | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if (self.construct_expr is None) == (self.spec is None):
            raise ValueError("provide exactly one of 'construct' or 'spec'")
        return self


class ClassifyRequest(RingSource):
    pass


class ClassifyResponse(BaseModel):
    ring: RingRef
    predicates: dict[str, bool]
    witnesses: dict[str, Any]
    counterexamples: dict[str, Any]
    structure: dict[str, Any]


class VerifyRequest(BaseModel):
    recipe: list[str] | None = None
    rings: list[RingSpecModel] | None = None
    only: list[str] | None = None
    jobs: int = Field(default=1, ge=1)
    ideal_cap: int | None = Field(default=None, ge=1)
    cor211_cap: int | None = Field(default=None, ge=1)
    cor211_degrees: list[int] | None = None


class VerifyResponse(BaseModel):
    config: dict[str, Any]
    corpus: list[dict[str, Any]]
    checks: list[dict[str, Any]]
    summary: dict[str, Any]


class ExtendRequest(RingSource):
    mu: int | None = None
    eta: int | None = None
    degree: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_shape(self) -> "ExtendRequest":
        quadratic = self.mu is not None or self.eta is not None
        if quadratic and self.degree is not None:
            raise ValueError("provide either 'mu'/'eta' or 'degree', not both")
        if quadratic and (self.mu is None or self.eta is None):
            raise ValueError("'mu' and 'eta' must be given together")
        if not quadratic and self.degree is None:
            raise ValueError("provide 'mu'/'eta' for a quadratic extension or "
                             "'degree' for a truncated polynomial extension")
        return self


class ExtendResponse(BaseModel):
    spec: RingSpecModel
    hash: str


class IdealsRequest(RingSource):
    include_flags: bool = True
    cap: int | None = Field(default=None, ge=1)


class IdealEntry(BaseModel):
    members: list[int]
    generators: list[int]
    flags: dict[str, bool]


class IdealsResponse(BaseModel):
    ring: RingRef
    count: int
    ideals: list[IdealEntry]


class ErrorBody(BaseModel):
    kind: str
    message: str
    detail: Any | None = None


class ErrorEnvelope(BaseModel):
    error: ErrorBody
