"""FastAPI application wrapping the core package.

All computation is pure and stateless, so the endpoints are plain synchronous
functions; concurrent requests need no coordination. Domain errors surface as
400s with the original message, malformed payloads as FastAPI's usual 422s.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..errors import DivergentIntegralError, ToleranceNotMetError
from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="beukers",
        summary="Exact log-power kernel integrals as rational zeta combinations",
        version="0.1.0",
    )

    def guarded(fn, request):
        try:
            return fn(request)
        except (DivergentIntegralError, ValueError, ArithmeticError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except ToleranceNotMetError as exc:
            raise HTTPException(status_code=500, detail=str(exc))

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/pfd", response_model=schemas.PfdResponse, response_model_exclude_none=True)
    def pfd(request: schemas.PfdRequest) -> schemas.PfdResponse:
        return guarded(handlers.handle_pfd, request)

    @app.post("/eval", response_model=schemas.EvalResponse)
    def eval_integral(request: schemas.EvalRequest) -> schemas.EvalResponse:
        return guarded(handlers.handle_eval, request)

    @app.post("/denom-check", response_model=schemas.DenomCheckResponse)
    def denom_check(request: schemas.DenomCheckRequest) -> schemas.DenomCheckResponse:
        return guarded(handlers.handle_denom_check, request)

    @app.post("/zeta5/table", response_model=schemas.TableResponse)
    def zeta5_table(request: schemas.TableRequest) -> schemas.TableResponse:
        return guarded(handlers.handle_table, request)

    @app.post("/bounds", response_model=schemas.BoundsResponse)
    def squeeze_bounds(request: schemas.BoundsRequest) -> schemas.BoundsResponse:
        return guarded(handlers.handle_bounds, request)

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(request: schemas.VerifyRequest) -> schemas.VerifyResponse:
        return guarded(handlers.handle_verify, request)

    @app.post("/mc-r2", response_model=schemas.McR2Response)
    def mc_r2(request: schemas.McR2Request) -> schemas.McR2Response:
        return guarded(handlers.handle_mc_r2, request)

    return app


app = create_app()
