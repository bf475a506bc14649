"""Ring-spec JSON interchange and canonical content hashing.

A ring-spec document fixes order, both operation tables, the zero/one
indices, and the involution permutation; negation is derived on load.
Canonical serialization (sorted keys, compact separators) makes content
hashes stable across round trips.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .core import ring_table
from .errors import MalformedRingError
from .star import StarRing, star_ring

REQUIRED_KEYS = ("order", "add", "mul", "zero", "one", "involution")


def ring_spec_dict(s: StarRing) -> dict:
    t = s.table
    spec: dict[str, Any] = {
        "order": t.order,
        "add": [list(row) for row in t.add],
        "mul": [list(row) for row in t.mul],
        "zero": t.zero,
        "one": t.one,
        "involution": list(s.star.perm),
    }
    if t.labels is not None:
        spec["labels"] = list(t.labels)
    return spec


def ring_from_dict(spec: dict, cap: int | None = None) -> StarRing:
    """Parse and fully validate a ring-spec dict.

    Raises MalformedRingError for structural issues, AxiomError when the
    tables fail the ring or involution laws, CapExceededError over the cap.
    """
    if not isinstance(spec, dict):
        raise MalformedRingError(f"ring spec must be an object, got {type(spec).__name__}")
    missing = [k for k in REQUIRED_KEYS if k not in spec]
    if missing:
        raise MalformedRingError(f"ring spec missing keys: {', '.join(missing)}")
    try:
        order = int(spec["order"])
        zero = int(spec["zero"])
        one = int(spec["one"])
    except (TypeError, ValueError):
        raise MalformedRingError("order/zero/one must be integers") from None
    if not isinstance(spec["add"], list) or not isinstance(spec["mul"], list):
        raise MalformedRingError("add/mul must be arrays of arrays")
    labels = spec.get("labels")
    table = ring_table(order, spec["add"], spec["mul"], zero, one, labels, cap=cap)
    involution = spec["involution"]
    if not isinstance(involution, list):
        raise MalformedRingError("involution must be an array of indices")
    return star_ring(table, [int(v) for v in involution])


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def content_hash(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


def ring_hash(s: StarRing) -> str:
    return content_hash(ring_spec_dict(s))


def save_ring(s: StarRing, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(ring_spec_dict(s), indent=2) + "\n")
    return path


def load_ring(path: str | Path, cap: int | None = None) -> StarRing:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise MalformedRingError(f"{path}: not valid JSON ({exc})") from None
    return ring_from_dict(raw, cap=cap)
