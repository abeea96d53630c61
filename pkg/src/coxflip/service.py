"""HTTP/JSON service exposing the engine to the interactive board.

Responses are pure functions of the request body.  Malformed input
(wrong shape, unparseable graph or bitstring) is a 400; well-formed
requests with out-of-domain values (unknown family, n below the family
minimum, vertex out of range) are a 422.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .errors import (
    CapacityError,
    CoxflipError,
    RangeError,
    UnsupportedFamilyError,
    ValidationError,
)
from .flipping import apply_move
from .gf2 import Gf2Vector
from .graphs import CoxeterGraph, build_family
from .orbits import classify, in_subspace_z, orbit_labels, simple_basis, weight
from .solver import MoveSequence, scramble, solve

_DOMAIN_ERRORS = (RangeError, UnsupportedFamilyError, CapacityError)


class MoveRequest(BaseModel):
    graph: dict
    config: str
    vertex: int


class SolveRequest(BaseModel):
    graph: dict
    src: str = Field(alias="from")
    dst: str = Field(alias="to")


class ClassifyRequest(BaseModel):
    family: str
    n: int
    config: str


class ScrambleRequest(BaseModel):
    graph: dict
    config: str
    k: int
    seed: int


def _parse_graph(data: dict) -> CoxeterGraph:
    try:
        return CoxeterGraph.from_json(data)
    except ValidationError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _parse_config(text: str, n: int) -> Gf2Vector:
    try:
        vec = Gf2Vector.from_string(text)
    except ValidationError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    if vec.n != n:
        raise HTTPException(
            status_code=422, detail=f"configuration has length {vec.n}, expected {n}"
        )
    return vec


def create_app(static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="coxflip", version="0.1.0")

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.exception_handler(CoxflipError)
    async def domain_error(request: Request, exc: CoxflipError):
        status = 422 if isinstance(exc, _DOMAIN_ERRORS) else 400
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.get("/api/graph")
    def get_graph(family: str, n: int) -> dict:
        try:
            return build_family(family, n).to_json()
        except (ValidationError, RangeError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.post("/api/move")
    def post_move(body: MoveRequest) -> dict:
        g = _parse_graph(body.graph)
        config = _parse_config(body.config, g.n)
        if not 1 <= body.vertex <= g.n:
            raise HTTPException(
                status_code=422, detail=f"vertex {body.vertex} out of range 1..{g.n}"
            )
        moved = apply_move(g, config, body.vertex)
        return {"config": moved.to_string(), "changed": moved != config}

    @app.post("/api/solve")
    def post_solve(body: SolveRequest) -> dict:
        g = _parse_graph(body.graph)
        a = _parse_config(body.src, g.n)
        b = _parse_config(body.dst, g.n)
        result = solve(g, a, b)
        if isinstance(result, MoveSequence):
            payload = {"reachable": True, "moves": list(result.moves)}
            if g.family in ("A", "D", "E"):
                label = classify(g.family, g.n, a)
                payload["from_label"] = label
                payload["to_label"] = label
            return payload
        return {
            "reachable": False,
            "moves": [],
            "from_label": result.from_label,
            "to_label": result.to_label,
        }

    @app.post("/api/classify")
    def post_classify(body: ClassifyRequest) -> dict:
        if body.family not in ("A", "D", "E"):
            raise HTTPException(
                status_code=422, detail=f"unknown family {body.family!r}"
            )
        try:
            basis = simple_basis(body.family, body.n)
        except (RangeError, UnsupportedFamilyError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        config = _parse_config(body.config, body.n)
        payload = {
            "label": classify(body.family, body.n, config),
            "labels": list(orbit_labels(body.family, body.n, config)),
            "weight": weight(basis, config),
        }
        if body.family == "D":
            payload["in_Z"] = in_subspace_z(basis, config)
        return payload

    @app.post("/api/scramble")
    def post_scramble(body: ScrambleRequest) -> dict:
        g = _parse_graph(body.graph)
        config = _parse_config(body.config, g.n)
        if body.k < 0:
            raise HTTPException(status_code=422, detail="k must be nonnegative")
        return {"config": scramble(g, config, body.k, body.seed).to_string()}

    static = Path(static_dir) if static_dir else Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if static.is_dir():
        app.mount("/", StaticFiles(directory=static, html=True), name="ui")

    return app
