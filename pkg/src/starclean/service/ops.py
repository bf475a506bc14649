"""The operations behind the service routes, callable in-process.

Each op takes a validated request model and returns a plain dict shaped like
the corresponding response model.  Domain errors propagate as the package's
exception types; the HTTP layer (or the CLI) maps them to status codes.
"""
from __future__ import annotations

from ..classify import classify
from ..construct import EXAMPLES, ExtensionSpec, build, extend_Ri, poly_quotient
from ..errors import ConstructorError
from ..ideals import DEFAULT_IDEAL_CAP, all_ideals, annotate_flags
from ..ringio import ring_from_dict, ring_hash, ring_spec_dict
from ..star import StarRing
from ..theorems import (
    CHECK_IDS,
    DEFAULT_COR211_CAP,
    DEFAULT_COR211_DEGREES,
    CorpusMember,
    SuiteConfig,
    run_suite,
)
from .models import (
    ClassifyRequest,
    ExtendRequest,
    IdealsRequest,
    VerifyRequest,
)


def resolve_ring(source) -> StarRing:
    if source.construct_expr is not None:
        return build(source.construct_expr)
    return ring_from_dict(source.spec.to_spec())


def normalize_only(only: list[str] | None) -> frozenset[str] | None:
    if only is None:
        return None
    wanted = frozenset(c.strip().lower() for c in only)
    unknown = sorted(wanted - set(CHECK_IDS))
    if unknown:
        raise ConstructorError(
            f"unknown check id(s): {', '.join(unknown)}; valid ids: {', '.join(CHECK_IDS)}")
    return wanted


def classify_op(req: ClassifyRequest) -> dict:
    return classify(resolve_ring(req))


def verify_op(req: VerifyRequest) -> dict:
    members = None
    if req.recipe is not None or req.rings is not None:
        members = [CorpusMember(expr, build(expr)) for expr in (req.recipe or [])]
        for i, spec in enumerate(req.rings or []):
            s = ring_from_dict(spec.to_spec())
            members.append(CorpusMember(f"ring[{i}]:{ring_hash(s)[:12]}", s))
    cfg = SuiteConfig(
        only=normalize_only(req.only),
        jobs=req.jobs,
        ideal_cap=req.ideal_cap if req.ideal_cap is not None else DEFAULT_IDEAL_CAP,
        cor211_cap=req.cor211_cap if req.cor211_cap is not None else DEFAULT_COR211_CAP,
        cor211_degrees=(tuple(req.cor211_degrees) if req.cor211_degrees is not None
                        else DEFAULT_COR211_DEGREES),
    )
    return run_suite(members, cfg)


def extend_op(req: ExtendRequest) -> dict:
    base = resolve_ring(req)
    if req.degree is not None:
        extended = poly_quotient(base, req.degree)
    else:
        extended = extend_Ri(ExtensionSpec(base, req.mu, req.eta))
    return {"spec": ring_spec_dict(extended), "hash": ring_hash(extended)}


def ideals_op(req: IdealsRequest) -> dict:
    s = resolve_ring(req)
    cap = req.cap if req.cap is not None else DEFAULT_IDEAL_CAP
    lattice = all_ideals(s.table, cap=cap)
    entries = []
    for ideal in lattice:
        if req.include_flags:
            annotate_flags(s, ideal, lattice)
        entries.append({
            "members": sorted(ideal.members),
            "generators": sorted(ideal.generators) if ideal.generators is not None else [],
            "flags": dict(sorted(ideal.flags.items())),
        })
    return {
        "ring": {"hash": ring_hash(s), "order": s.order},
        "count": len(entries),
        "ideals": entries,
    }


def constructor_catalog() -> dict:
    return {
        "kinds": [
            {"form": "zn:N", "about": "integers modulo N with the identity involution"},
            {"form": "product:EXPR,EXPR[,...]", "about": "direct product, componentwise"},
            {"form": "ri:EXPR,mu=M,eta=E",
             "about": "quadratic extension by i with i*i = mu*i + eta (commutative base; "
                      "mu, eta fixed by the involution)"},
            {"form": "poly:EXPR,n=N",
             "about": "truncated polynomial ring: coefficients in the base, x^N = 0"},
            {"form": "example:NAME", "about": "a fixed example ring"},
        ],
        "examples": sorted(EXAMPLES),
    }
