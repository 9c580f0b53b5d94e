"""HTTP service wrapping the script runner.

POST /run takes a script plus execution options and returns the formatted
output together with structured per-directive records.  Engine errors are
reported in the response body with exit_code 1; parse errors with 2.
"""

from __future__ import annotations

from fastapi import FastAPI
from pydantic import BaseModel, Field

from .context import Budget, Context
from .errors import ParseError, VirtconeError
from .lang import parse
from .rationals import rat_str
from .runner import format_human, format_machine, run

app = FastAPI(title="virtcone", version="1.0")


class RunRequest(BaseModel):
    source: str
    seed: int = 0
    redraws: int = Field(default=2, ge=1)
    order: str = Field(default="grevlex", pattern="^(grevlex|lex)$")
    format: str = Field(default="machine", pattern="^(human|machine)$")
    max_degree: int | None = None
    saturate_limits: bool = True
    attest_containment: bool = False


class RecordModel(BaseModel):
    directive: str
    kind: str
    payload: list[str] | str
    warnings: list[str]


class RunResponse(BaseModel):
    output: str = ""
    records: list[RecordModel] = []
    error: str | None = None
    exit_code: int = 0


def _payload_strings(rec) -> list[str] | str:
    if rec.kind == "class":
        return [rat_str(c) for c in rec.payload.coeffs]
    if rec.kind == "int":
        return str(rec.payload)
    return [str(v) for v in rec.payload]


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/run", response_model=RunResponse)
def run_script(req: RunRequest) -> RunResponse:
    try:
        ast = parse(req.source)
    except ParseError as e:
        return RunResponse(error=f"parse error: {e}", exit_code=2)
    budget = Budget()
    if req.max_degree is not None:
        import dataclasses

        budget = dataclasses.replace(budget, max_degree=req.max_degree)
    ctx = Context(seed=req.seed, redraws=req.redraws, budget=budget)
    try:
        records = run(ast, ctx, saturate_limits=req.saturate_limits,
                      attest_containment=req.attest_containment,
                      order=req.order)
    except VirtconeError as e:
        return RunResponse(error=str(e), exit_code=1)
    fmt = format_machine if req.format == "machine" else format_human
    return RunResponse(
        output=fmt(records, ctx),
        records=[RecordModel(directive=r.directive, kind=r.kind,
                             payload=_payload_strings(r),
                             warnings=list(r.warnings))
                 for r in records])
