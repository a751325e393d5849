"""Request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

MAX_RANK = 5


class RunConfig(BaseModel):
    n: int = Field(default=4, ge=1, le=MAX_RANK)
    J: Optional[list[int]] = None
    degree_window: Optional[tuple[int, int]] = None
    seed: int = 0
    output_format: Literal["json", "dot", "text"] = "json"
    budget_seconds: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _j_in_range(self):
        if self.J is not None:
            if any(not 1 <= j <= self.n for j in self.J):
                raise ValueError(f"J={self.J} not inside 1..{self.n}")
            self.J = sorted(set(self.J))
        return self


class RedwordsRequest(BaseModel):
    n: int = Field(default=4, ge=1, le=MAX_RANK)
    J: Optional[list[int]] = None
    word: Optional[list[int]] = None

    @model_validator(mode="after")
    def _some_target(self):
        if (self.J is None) == (self.word is None):
            raise ValueError("exactly one of J or word is required")
        return self


class RedwordsResponse(BaseModel):
    schema_: str = Field(alias="schema")
    element: list[int]
    count: int
    words: list[list[int]]

    model_config = {"populate_by_name": True}


class GraphRequest(BaseModel):
    n: int = Field(default=4, ge=1, le=MAX_RANK)
    J: Optional[list[int]] = None
    word: Optional[list[int]] = None
    conflated: bool = False
    output_format: Literal["json", "dot"] = "json"

    @model_validator(mode="after")
    def _some_target(self):
        if (self.J is None) == (self.word is None):
            raise ValueError("exactly one of J or word is required")
        return self


class GraphResponse(BaseModel):
    schema_: str = Field(alias="schema")
    graph: Optional[dict] = None
    dot: Optional[str] = None
    cycle_census: dict[str, int]

    model_config = {"populate_by_name": True}


class ZmatRequest(BaseModel):
    n: int = Field(default=4, ge=1, le=MAX_RANK)
    J: list[int]
    which: Literal["z", "zbar"] = "z"


class MorphismDump(BaseModel):
    schema_: str = Field(alias="schema")
    source: list[int]
    target: list[int]
    degree: int
    matrix: list[list[str]]

    model_config = {"populate_by_name": True}


class VerifyRequest(BaseModel):
    suite: Literal["demazure", "hecke", "relations", "zidem", "aprops",
                   "aborts", "ranks", "tj"]
    config: RunConfig = RunConfig()


class VerifyResponse(BaseModel):
    schema_: str = Field(alias="schema")
    suite: str
    status: Literal["pass", "fail", "budget_exceeded"]
    elapsed_seconds: float
    checks: list[dict]

    model_config = {"populate_by_name": True}


class HomdimRequest(BaseModel):
    n: int = Field(default=2, ge=1, le=MAX_RANK)
    x: list[int] = []
    y: list[int] = []
    degree_lo: int = -4
    degree_hi: int = 4

    @field_validator("x", "y")
    @classmethod
    def _letters(cls, v, info):
        return v

    @model_validator(mode="after")
    def _in_range(self):
        for w in (self.x, self.y):
            if any(not 1 <= i <= self.n for i in w):
                raise ValueError(f"word {w} not inside 1..{self.n}")
        if self.degree_lo > self.degree_hi:
            raise ValueError("empty degree window")
        return self


class HomdimRow(BaseModel):
    degree: int
    solved: int
    predicted: int


class HomdimResponse(BaseModel):
    schema_: str = Field(alias="schema")
    x: list[int]
    y: list[int]
    rank_polynomial: dict[str, str]
    rows: list[HomdimRow]
    agree: bool

    model_config = {"populate_by_name": True}


class DualBasisRequest(BaseModel):
    n: int = Field(default=4, ge=1, le=MAX_RANK)
    J: list[int]

    @model_validator(mode="after")
    def _in_range(self):
        if any(not 1 <= j <= self.n for j in self.J):
            raise ValueError(f"J={self.J} not inside 1..{self.n}")
        return self


class DualBasisRow(BaseModel):
    element: list[int]
    basis: str
    dual: str


class DualBasisResponse(BaseModel):
    schema_: str = Field(alias="schema")
    J: list[int]
    rows: list[DualBasisRow]

    model_config = {"populate_by_name": True}
