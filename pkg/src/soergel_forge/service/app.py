"""FastAPI service wrapping the engine; run with

    uvicorn soergel_forge.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI

from .. import SCHEMA, __version__
from . import handlers
from .models import (DualBasisRequest, DualBasisResponse, GraphRequest,
                     GraphResponse, HomdimRequest, HomdimResponse,
                     MorphismDump, RedwordsRequest, RedwordsResponse,
                     VerifyRequest, VerifyResponse, ZmatRequest)

app = FastAPI(title="soergel-forge",
              description="Exact Bott-Samelson bimodule computations",
              version=__version__)


@app.get("/v1/health")
def health():
    return {"schema": SCHEMA, "status": "ok", "version": __version__}


@app.post("/v1/redwords", response_model=RedwordsResponse,
          response_model_by_alias=True)
def redwords(req: RedwordsRequest):
    return handlers.redwords(req)


@app.post("/v1/graph", response_model=GraphResponse,
          response_model_by_alias=True)
def graph(req: GraphRequest):
    return handlers.graph(req)


@app.post("/v1/zmat", response_model=MorphismDump,
          response_model_by_alias=True)
def zmat(req: ZmatRequest):
    return handlers.zmat(req)


@app.post("/v1/verify", response_model=VerifyResponse,
          response_model_by_alias=True)
def run_verify(req: VerifyRequest):
    return handlers.run_verify(req)


@app.post("/v1/homdim", response_model=HomdimResponse,
          response_model_by_alias=True)
def homdim(req: HomdimRequest):
    return handlers.homdim(req)


@app.post("/v1/dualbasis", response_model=DualBasisResponse,
          response_model_by_alias=True)
def dualbasis(req: DualBasisRequest):
    return handlers.dualbasis(req)
