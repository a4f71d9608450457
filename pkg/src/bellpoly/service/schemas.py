"""Pydantic request/response models for the HTTP service.

The sweep config payload mirrors the config-file schema one-to-one, so the
CLI can forward a parsed TOML/JSON file without reshaping it.
"""
from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

Number = Union[int, float]
# A matrix entry is either a real number or an [re, im] pair.
Entry = Union[Number, tuple[Number, Number]]


class GridModel(BaseModel):
    min: float
    max: float
    steps: int = Field(ge=1)


class SweepConfigModel(BaseModel):
    model_config = ConfigDict(extra="forbid", protected_namespaces=())

    model: Literal["polygon_dimer", "ring"]
    n: Optional[int] = None
    m: Optional[int] = None
    delta0: float = 1.0
    delta: float = 1.0
    j_over_j0: Union[GridModel, float, None] = None
    t: Union[GridModel, float, None] = None
    pairs: list[tuple[int, int]]
    observables: Optional[list[str]] = None
    degeneracy_tol: float = 1e-8
    seed: int = 0
    zero_t_as_small_t: bool = False
    energies_lowest_k: int = 2

    def as_config_dict(self) -> dict:
        d = self.model_dump(exclude_none=True)
        for key in ("j_over_j0", "t"):
            if isinstance(d.get(key), dict):
                d[key] = {k: d[key][k] for k in ("min", "max", "steps")}
        return d


class SweepRequest(BaseModel):
    config: SweepConfigModel
    format: Literal["csv", "json"] = "json"


class SweepResponse(BaseModel):
    columns: list[str]
    rows: list[list[Union[int, float]]]
    metadata: dict


class BellRequest(BaseModel):
    matrix: list[list[Entry]]


class BellResponse(BaseModel):
    m: list[list[float]]
    lambda1: float
    lambda2: float
    b: float
    violated: bool


class PairB(BaseModel):
    i: int
    j: int
    b: float


class MonogamyEntry(BaseModel):
    i: int
    j: int
    k: int
    slack: float


class WitnessEntry(BaseModel):
    i: int
    j: int
    k: Optional[int]


class AuditResponse(BaseModel):
    t: float
    j_over_j0: float
    n_sites: int
    pair_b: list[PairB]
    monogamy: list[MonogamyEntry]
    witnesses: list[WitnessEntry]
    version: str


class ErrorBody(BaseModel):
    kind: Literal["config", "capacity", "numerical"]
    detail: str


class HealthResponse(BaseModel):
    status: str
    version: str
