"""HTTP front end: the handler layer exposed as a FastAPI app."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__, api
from .errors import (
    CoHiggsError,
    NotIntegrable,
    NotStable,
    NonHomogeneous,
    ParseError,
    RouteDisagreement,
    ZeroSection,
)

app = FastAPI(
    title="cohiggs",
    version=__version__,
    description=(
        "Exact verification service for rank-2 co-Higgs bundle data on the"
        " projective plane: cohomology tables, integrable-field solving,"
        " deformation dimensions, Chern coverage."
    ),
)


def _guard(fn, request):
    try:
        return fn(request)
    except (ParseError, NonHomogeneous, ValueError) as e:
        raise HTTPException(status_code=422, detail={"error": type(e).__name__, "message": str(e)})
    except (NotIntegrable, NotStable, ZeroSection) as e:
        raise HTTPException(status_code=409, detail={"error": type(e).__name__, "message": str(e)})
    except RouteDisagreement as e:
        raise HTTPException(
            status_code=500,
            detail={"error": "RouteDisagreement", "message": str(e), "ledger": e.ledger},
        )
    except CoHiggsError as e:
        raise HTTPException(status_code=400, detail={"error": type(e).__name__, "message": str(e)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/tables", response_model=api.TablesResponse)
def tables(request: api.TablesRequest) -> api.TablesResponse:
    return _guard(api.handle_tables, request)


@app.post("/solve", response_model=api.SolveResponse)
def solve(request: api.SolveRequest) -> api.SolveResponse:
    return _guard(api.handle_solve, request)


@app.post("/h1", response_model=api.H1Response)
def h1(request: api.H1Request) -> api.H1Response:
    return _guard(api.handle_h1, request)


@app.post("/chern", response_model=api.ChernResponse)
def chern(request: api.ChernRequest) -> api.ChernResponse:
    return _guard(api.handle_chern, request)


@app.post("/conic", response_model=api.ConicResponse)
def conic(request: api.ConicRequest) -> api.ConicResponse:
    return _guard(api.handle_conic, request)


@app.post("/verify-all", response_model=api.VerifyResponse)
def verify_all(request: api.VerifyRequest) -> api.VerifyResponse:
    return _guard(api.handle_verify, request)
