"""FastAPI service exposing sweeps, one-off Bell analysis, spectra and audits.

Error bodies carry a machine-readable `kind` (config | capacity | numerical)
that the CLI maps onto its exit codes.
"""
from __future__ import annotations

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import __version__
from ..bell import horodecki_b
from ..errors import CapacityError, ConfigError, NumericalConsistencyError
from ..reduced import TwoQubitState
from ..sweep import SweepConfig, run_audit, run_spectrum, run_sweep, to_csv
from .schemas import (
    AuditResponse,
    BellRequest,
    BellResponse,
    HealthResponse,
    SweepConfigModel,
    SweepRequest,
    SweepResponse,
)

app = FastAPI(title="bellpoly", version=__version__)


def _error(status: int, kind: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"kind": kind, "detail": detail})


@app.exception_handler(ConfigError)
async def _config_error(_req: Request, exc: ConfigError):
    return _error(400, "config", str(exc))


@app.exception_handler(ValueError)
async def _value_error(_req: Request, exc: ValueError):
    return _error(400, "config", str(exc))


@app.exception_handler(CapacityError)
async def _capacity_error(_req: Request, exc: CapacityError):
    return _error(400, "capacity", str(exc))


@app.exception_handler(NumericalConsistencyError)
async def _numerical_error(_req: Request, exc: NumericalConsistencyError):
    return _error(500, "numerical", str(exc))


def _build_config(model: SweepConfigModel) -> SweepConfig:
    return SweepConfig.from_dict(model.as_config_dict())


@app.get("/healthz", response_model=HealthResponse)
def healthz() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/sweep")
def sweep(req: SweepRequest):
    result = run_sweep(_build_config(req.config))
    if req.format == "csv":
        return PlainTextResponse(to_csv(result), media_type="text/csv")
    return SweepResponse(
        columns=list(result.columns),
        rows=[list(r) for r in result.rows],
        metadata=result.metadata,
    )


@app.post("/spectrum")
def spectrum(req: SweepRequest):
    result = run_spectrum(_build_config(req.config))
    if req.format == "csv":
        return PlainTextResponse(to_csv(result), media_type="text/csv")
    return SweepResponse(
        columns=list(result.columns),
        rows=[list(r) for r in result.rows],
        metadata=result.metadata,
    )


@app.post("/audit", response_model=AuditResponse)
def audit(config: SweepConfigModel):
    return AuditResponse(**run_audit(_build_config(config)))


@app.post("/bell", response_model=BellResponse)
def bell(req: BellRequest):
    rows = req.matrix
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise ConfigError("matrix: expected a 4x4 matrix")
    entries = np.empty((4, 4), dtype=complex)
    for r in range(4):
        for c in range(4):
            cell = rows[r][c]
            entries[r, c] = complex(cell[0], cell[1]) if isinstance(cell, tuple) else complex(cell)
    state = TwoQubitState((0, 1), entries).validate()
    report = horodecki_b(state)
    return BellResponse(
        m=[[float(v) for v in row] for row in report.m],
        lambda1=report.lambda1,
        lambda2=report.lambda2,
        b=report.b,
        violated=report.violated,
    )
