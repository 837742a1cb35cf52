"""HTTP front end: a thin FastAPI wrapper over the service layer."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__, service
from .poly import ConsistencyError, UsageError

app = FastAPI(
    title="curveorbits",
    version=__version__,
    description=(
        "Exact equivariant classes of orbit closures of plane curves "
        "and point configurations."
    ),
)


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except UsageError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except ConsistencyError as exc:
        raise HTTPException(status_code=500, detail=f"consistency failure: {exc}")


@app.get("/healthz")
def healthz():
    return {"status": "ok", "version": __version__}


@app.post("/class", response_model=service.OrbitClassModel)
def orbit_class(req: service.ClassRequest):
    return _guard(service.class_response, req)


@app.get("/table/{which}", response_model=service.TableModel)
def table(which: str):
    return _guard(service.table_response, which)


@app.post("/table/{which}", response_model=service.TableModel)
def table_with_locals(which: str, req: service.VerifyRequest):
    return _guard(service.table_response, which, req.kazarian)


@app.post("/verify", response_model=service.VerifyResponse)
def verify(req: service.VerifyRequest):
    return _guard(service.verify_response, req)


@app.get("/towers")
def towers():
    return service.towers_debug()
