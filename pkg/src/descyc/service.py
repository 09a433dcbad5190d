"""Local JSON-over-HTTP service backing the explorer UI.

Stateless handlers over the pure move-system functions; malformed requests
come back as 400 with a machine-readable error object, illegal moves as 422.
Binds loopback by default; this is a UI backend, not a deployment target.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from descyc.perm import descent_set, length, parse_perm
from descyc.problems import (
    DcMove,
    IllegalMoveError,
    InvalidProblemError,
    SchubertProblem,
    apply_move,
    bruhat_vanishing_check,
    dc_path,
    is_dc_trivial,
    legal_moves,
)
from descyc.schubert import symmetric_number

PermIn = "list[int] | str"


class TripleIn(BaseModel):
    u: list[int] | str
    v: list[int] | str
    w: list[int] | str

    def problem(self) -> SchubertProblem:
        return SchubertProblem(parse_perm(self.u), parse_perm(self.v), parse_perm(self.w))


class MoveIn(BaseModel):
    col: int
    src: int = Field(alias="from")
    tgt: int = Field(alias="to")
    model_config = {"populate_by_name": True}


class MoveRequest(BaseModel):
    problem: TripleIn
    move: MoveIn


class PathRequest(BaseModel):
    problem: TripleIn
    goal: str = "easy"


class NumberRequest(TripleIn):
    double: bool = False


class MonkRequest(BaseModel):
    pi: list[int] | str
    i: int
    sigma: list[int] | str


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


def _analyze_obj(p: SchubertProblem) -> dict:
    trivial, witness = (None, None)
    moves = []
    if p.is_vertex:
        trivial, witness = is_dc_trivial(p)
        moves = [m.to_obj() for m in legal_moves(p)]
    return {
        "problem": p.to_obj(),
        "n": p.n,
        "lengths": [length(a) for a in p.args],
        "descents": [sorted(descent_set(a)) for a in p.args],
        "vertex": p.is_vertex,
        "dc_trivial": trivial,
        "witness_column": witness,
        "legal_moves": moves,
        "bruhat_possible": bruhat_vanishing_check(p) if p.is_vertex else None,
    }


def create_app(ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="descent-cycling service", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return _error(400, "malformed", str(exc.errors()[:3]))

    @app.exception_handler(InvalidProblemError)
    async def invalid(request: Request, exc: InvalidProblemError):
        return _error(400, "invalid_problem", str(exc))

    @app.exception_handler(ValueError)
    async def bad_value(request: Request, exc: ValueError):
        return _error(400, "invalid", str(exc))

    @app.exception_handler(IllegalMoveError)
    async def illegal(request: Request, exc: IllegalMoveError):
        return _error(422, "illegal_move", str(exc))

    @app.post("/analyze")
    async def analyze(req: TripleIn):
        return _analyze_obj(req.problem())

    @app.post("/move")
    async def move(req: MoveRequest):
        p = req.problem.problem()
        q = apply_move(p, DcMove(req.move.col, req.move.src, req.move.tgt))
        return {"problem": q.to_obj(), "analysis": _analyze_obj(q)}

    @app.post("/path")
    async def path(req: PathRequest):
        p = req.problem.problem()
        found = dc_path(p, req.goal)
        if found is None:
            return {"found": False, "goal": req.goal}
        return {
            "found": True,
            "goal": req.goal,
            "path": found.to_obj(),
            "end": found.end.to_obj(),
        }

    @app.post("/number")
    async def number(req: NumberRequest):
        p = req.problem()
        if req.double:
            from descyc.perm import w0_complement
            from descyc.schubert import structure_constant

            table = structure_constant(p.u, p.v, w0_complement(p.w), double=True)
            return {"problem": p.to_obj(), "value_table": table.to_obj()}
        return {"problem": p.to_obj(), "value": symmetric_number(*p.args)}

    @app.post("/monk")
    async def monk(req: MonkRequest):
        from descyc.monk import MonkInstance, monk_dc_proof, monk_value

        inst = MonkInstance(parse_perm(req.pi), req.i, parse_perm(req.sigma))
        val = monk_value(inst)
        out = {
            "value": val.value,
            "cover": val.cover,
            "straddle": val.straddle,
            "positions": list(val.positions) if val.positions else None,
        }
        if val.cover:
            proof = monk_dc_proof(inst)
            out["proof"] = {
                "kind": proof.kind,
                "witness_column": proof.witness_column,
                "path": proof.path.to_obj(),
                "end": proof.end.to_obj(),
            }
        return out

    static = Path(ui_dir) if ui_dir else Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if static.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static), html=True), name="ui")
    return app
