"""Stateless JSON-over-HTTP service for the solver and the game engine.

Every request carries the full game state; responses canonicalize it.
Malformed bodies get 400, limit violations 422, both as {"error": ...}.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .core import InvalidMoveError, JarSet, LimitExceededError, Move
from .game import GamePosition, apply_position_move, best_move, classify_position
from .solver import solve

SCHEMA_VERSION = 1

#: Service-level defaults; the library engine itself allows more.
DEFAULT_MAX_JARS = 3
DEFAULT_MAX_VALUE = 200


class MoveBody(BaseModel):
    amount: int
    targets: list[int]


class EvalBody(BaseModel):
    jars: list[int]


class StepBody(BaseModel):
    jars: list[int]
    move: MoveBody | None = None


class SolveBody(BaseModel):
    set: list[int]


def _move_json(move: Move) -> dict[str, Any]:
    return {"amount": move.amount, "targets": list(move.targets)}


def _analysis_json(pos: GamePosition, limit: int) -> dict[str, Any]:
    pc = classify_position(pos, limit=limit)
    return {
        "status": pc.status,
        "winningMoves": [_move_json(m) for m in pc.winning_moves],
    }


def create_app(
    max_jars: int = DEFAULT_MAX_JARS,
    max_value: int = DEFAULT_MAX_VALUE,
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="cookie monster arena", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors()[:1])})

    @app.exception_handler(LimitExceededError)
    async def limits(request: Request, exc: LimitExceededError):
        return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.exception_handler(InvalidMoveError)
    async def invalid_move(request: Request, exc: InvalidMoveError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(ValueError)
    async def bad_value(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    def check_values(jars: list[int]) -> None:
        if len(jars) > max_jars:
            raise LimitExceededError(f"at most {max_jars} jars supported")
        if any(v > max_value for v in jars):
            raise LimitExceededError(f"jar values capped at {max_value}")

    def check_position(jars: list[int]) -> GamePosition:
        check_values(jars)
        return GamePosition(jars)

    def apply_raw(jars: list[int], amount: int, targets: list[int]) -> list[int]:
        """Apply the human move against the jars exactly as sent."""
        if not targets:
            raise InvalidMoveError("move must target at least one jar")
        if amount < 1:
            raise InvalidMoveError(f"amount must be >= 1, got {amount}")
        out = list(jars)
        for idx in set(targets):
            if idx < 0 or idx >= len(out):
                raise InvalidMoveError(f"target index {idx} out of range")
            if out[idx] < amount:
                raise InvalidMoveError(f"cannot take {amount} from jar with {out[idx]}")
            out[idx] -= amount
        return out

    @app.get("/api/health")
    async def health():
        return {"ok": True}

    @app.post("/api/game/eval")
    async def game_eval(body: EvalBody):
        pos = check_position(body.jars)
        return _analysis_json(pos, max_value)

    @app.post("/api/game/step")
    async def game_step(body: StepBody):
        check_values(body.jars)
        if any(v < 0 for v in body.jars):
            raise InvalidMoveError("jar values must be >= 0")
        if body.move is not None:
            applied = GamePosition(apply_raw(body.jars, body.move.amount, body.move.targets))
        else:
            if sum(body.jars) == 0:
                raise InvalidMoveError("no game to play from the all-zero position")
            applied = GamePosition(body.jars)  # engine opens from this position
        response: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "applied": list(applied.jars),
            "engineReply": None,
            "state": list(applied.jars),
            "status": "human_won" if applied.total == 0 else "engine_to_move",
            "analysis": None,
        }
        if applied.total == 0:
            return response
        reply = best_move(applied, limit=max_value)
        after = apply_position_move(applied, reply.move)
        response["engineReply"] = _move_json(reply.move)
        response["state"] = list(after.jars)
        response["status"] = "engine_won" if after.total == 0 else "human_to_move"
        response["analysis"] = _analysis_json(after, max_value)
        return response

    @app.post("/api/solve")
    async def solve_set(body: SolveBody):
        jars = JarSet(body.set)
        result = solve(jars)
        return {
            "schema": SCHEMA_VERSION,
            "set": list(jars.elements),
            "cm": result.cm,
            "witness": list(result.witness.amounts),
            "trace": [_move_json(m) for m in result.trace],
            "lowerBound": result.lower_bound,
            "upperBound": result.upper_bound,
        }

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
