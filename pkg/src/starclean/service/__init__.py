"""HTTP service layer: pydantic schemas, operations, and the FastAPI app."""
from .app import create_app
from .models import (
    ClassifyRequest,
    ClassifyResponse,
    ErrorEnvelope,
    ExtendRequest,
    ExtendResponse,
    IdealsRequest,
    IdealsResponse,
    RingSpecModel,
    VerifyRequest,
    VerifyResponse,
)
from .ops import classify_op, extend_op, ideals_op, verify_op

__all__ = [
    "ClassifyRequest",
    "ClassifyResponse",
    "ErrorEnvelope",
    "ExtendRequest",
    "ExtendResponse",
    "IdealsRequest",
    "IdealsResponse",
    "RingSpecModel",
    "VerifyRequest",
    "VerifyResponse",
    "classify_op",
    "create_app",
    "extend_op",
    "ideals_op",
    "verify_op",
]
