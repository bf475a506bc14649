"""FastAPI application exposing the classification toolkit over HTTP."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..errors import (
    AxiomError,
    CapExceededError,
    ConstructorError,
    MalformedRingError,
    PreconditionError,
)
from .models import (
    ClassifyRequest,
    ClassifyResponse,
    ExtendRequest,
    ExtendResponse,
    IdealsRequest,
    IdealsResponse,
    VerifyRequest,
    VerifyResponse,
)
from .ops import classify_op, constructor_catalog, extend_op, ideals_op, verify_op

_STATUS = (
    (AxiomError, 422, "axiom-violation"),
    (CapExceededError, 413, "cap-exceeded"),
    (ConstructorError, 400, "constructor-error"),
    (PreconditionError, 400, "precondition-error"),
    (MalformedRingError, 400, "malformed-ring"),
)


def _envelope(kind: str, message: str, detail=None) -> dict:
    body = {"kind": kind, "message": message}
    if detail is not None:
        body["detail"] = detail
    return {"error": body}


def create_app() -> FastAPI:
    from .. import __version__

    app = FastAPI(title="starclean", version=__version__,
                  description="Finite *-ring classification service")

    for exc_type, status, kind in _STATUS:
        def _handler(request: Request, exc: Exception, status=status, kind=kind):
            detail = None
            if isinstance(exc, AxiomError):
                detail = [v.to_dict() if hasattr(v, "to_dict") else v
                          for v in exc.violations]
            return JSONResponse(status_code=status,
                                content=_envelope(kind, str(exc), detail))

        app.add_exception_handler(exc_type, _handler)

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):
        detail = [{"loc": [str(part) for part in e.get("loc", ())],
                   "msg": str(e.get("msg", "")), "type": str(e.get("type", ""))}
                  for e in exc.errors()]
        return JSONResponse(status_code=400,
                            content=_envelope("bad-request", "invalid request body",
                                              detail=detail))

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/constructors")
    def constructors() -> dict:
        return constructor_catalog()

    @app.post("/classify", response_model=ClassifyResponse)
    def classify_route(req: ClassifyRequest):
        return classify_op(req)

    @app.post("/verify", response_model=VerifyResponse)
    def verify_route(req: VerifyRequest):
        return verify_op(req)

    @app.post("/extend", response_model=ExtendResponse)
    def extend_route(req: ExtendRequest):
        return extend_op(req)

    @app.post("/ideals", response_model=IdealsResponse)
    def ideals_route(req: IdealsRequest):
        return ideals_op(req)

    return app
