"""Finite rings represented as dense operation tables over element indices.

Elements of a ring of order n are the indices 0..n-1.  Addition and
multiplication are n x n lookup tables; negation is a length-n table derived
from addition.  Everything downstream (involutions, ideals, classifiers)
consumes validated tables only.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import AxiomError, CapExceededError, MalformedRingError

DEFAULT_MAX_ORDER = 4096
MAX_ORDER_ENV = "STARCLEAN_MAX_ORDER"

# Single-shot tensor checks allocate O(n^3); above this order fall back to
# row-chunked checks to bound memory.
_TENSOR_LIMIT = 300


def max_order() -> int:
    """Hard cap on ring order for element-level work; env-overridable."""
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise MalformedRingError(
            f"{MAX_ORDER_ENV} must be an integer, got {raw!r}"
        ) from None
    if value < 1:
        raise MalformedRingError(f"{MAX_ORDER_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class RingTable:
    """A finite ring given by Cayley tables.

    order:  number of elements
    add:    add[x][y] = index of x + y
    mul:    mul[x][y] = index of x * y
    neg:    neg[x] = index of -x
    zero:   index of the additive identity
    one:    index of the multiplicative identity
    labels: optional human-readable element names, index-aligned
    """

    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    zero: int
    one: int
    labels: tuple[str, ...] | None = None

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)


@dataclass(frozen=True)
class AxiomViolation:
    law: str
    witness: tuple[int, ...]
    message: str

    def to_dict(self) -> dict:
        return {"law": self.law, "witness": list(self.witness), "message": self.message}


@dataclass
class RingValidation:
    ok: bool
    violations: list[AxiomViolation] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


def _as_rows(rows: Sequence[Sequence[int]], n: int, what: str) -> tuple[tuple[int, ...], ...]:
    if len(rows) != n:
        raise MalformedRingError(f"{what} table must have {n} rows, got {len(rows)}")
    out = []
    for i, row in enumerate(rows):
        row = tuple(int(v) for v in row)
        if len(row) != n:
            raise MalformedRingError(f"{what} table row {i} has length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise MalformedRingError(f"{what}[{i}] contains out-of-range index {v}")
        out.append(row)
    return tuple(out)


def ring_table(
    order: int,
    add: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
    zero: int,
    one: int,
    labels: Sequence[str] | None = None,
    cap: int | None = None,
) -> RingTable:
    """Structural gate: shape/range checks, negation derivation, cap check.

    Raises MalformedRingError for structural problems and CapExceededError when
    the order exceeds the cap.  Axiom checking is validate_ring's job.
    """
    if not isinstance(order, int) or order < 1:
        raise MalformedRingError(f"ring order must be a positive integer, got {order!r}")
    limit = cap if cap is not None else max_order()
    if order > limit:
        raise CapExceededError(f"ring order {order} exceeds cap {limit}")
    add_t = _as_rows(add, order, "add")
    mul_t = _as_rows(mul, order, "mul")
    if not 0 <= zero < order:
        raise MalformedRingError(f"zero index {zero} out of range")
    if not 0 <= one < order:
        raise MalformedRingError(f"one index {one} out of range")
    # Negation is derived, not supplied: -x is the y with x + y = zero.  A
    # missing inverse shows up later as an add-inverse axiom violation.
    neg = []
    for x in range(order):
        row = add_t[x]
        try:
            neg.append(row.index(zero))
        except ValueError:
            neg.append(x)
    lab = None
    if labels is not None:
        if len(labels) != order:
            raise MalformedRingError(f"labels must have length {order}, got {len(labels)}")
        lab = tuple(str(v) for v in labels)
    return RingTable(order, add_t, mul_t, tuple(neg), zero, one, lab)


def _first_mismatch3(lhs: np.ndarray, rhs: np.ndarray) -> tuple[int, ...]:
    idx = np.argwhere(lhs != rhs)
    return tuple(int(v) for v in idx[0])


def _check_assoc(T: np.ndarray, law: str, violations: list[AxiomViolation]) -> None:
    n = T.shape[0]
    if n <= _TENSOR_LIMIT:
        lhs = T[T, :]          # lhs[x,y,z] = T[T[x,y], z]
        rhs = T[:, T]          # rhs[x,y,z] = T[x, T[y,z]]
        if not np.array_equal(lhs, rhs):
            x, y, z = _first_mismatch3(lhs, rhs)
            violations.append(AxiomViolation(law, (x, y, z), f"({x},{y},{z}) associates badly"))
        return
    for x in range(n):
        lhs = T[T[x], :]
        rhs = T[x][T]
        if not np.array_equal(lhs, rhs):
            y, z = _first_mismatch3(lhs, rhs)
            violations.append(AxiomViolation(law, (x, y, z), f"({x},{y},{z}) associates badly"))
            return


def _check_distrib(A: np.ndarray, M: np.ndarray, violations: list[AxiomViolation]) -> None:
    n = A.shape[0]
    for x in range(n):
        row = M[x]
        lhs = row[A]                               # x*(y+z)
        rhs = A[row[:, None], row[None, :]]        # x*y + x*z
        if not np.array_equal(lhs, rhs):
            y, z = _first_mismatch3(lhs, rhs)
            violations.append(
                AxiomViolation("left-distributive", (x, y, z), f"{x}*({y}+{z}) != {x}*{y}+{x}*{z}")
            )
            break
    for x in range(n):
        col = M[:, x]
        lhs = col[A]                               # (y+z)*x
        rhs = A[col[:, None], col[None, :]]        # y*x + z*x
        if not np.array_equal(lhs, rhs):
            y, z = _first_mismatch3(lhs, rhs)
            violations.append(
                AxiomViolation("right-distributive", (y, z, x), f"({y}+{z})*{x} != {y}*{x}+{z}*{x}")
            )
            break


def validate_ring(rt: RingTable) -> RingValidation:
    """Check every ring axiom by exhaustive table scan.

    Returns the list of violated laws, each with a witness tuple.  Structural
    defects (bad shapes, out-of-range entries) raise MalformedRingError instead
    of being reported as axiom violations.
    """
    n = rt.order
    A = np.asarray(rt.add, dtype=np.int32)
    M = np.asarray(rt.mul, dtype=np.int32)
    for name, T in (("add", A), ("mul", M)):
        if T.shape != (n, n):
            raise MalformedRingError(f"{name} table has shape {T.shape}, expected {(n, n)}")
        if T.min(initial=0) < 0 or T.max(initial=0) >= n:
            raise MalformedRingError(f"{name} table contains out-of-range indices")
    if not (0 <= rt.zero < n and 0 <= rt.one < n):
        raise MalformedRingError("zero/one indices out of range")

    violations: list[AxiomViolation] = []
    ident = np.arange(n, dtype=np.int32)

    if not np.array_equal(A, A.T):
        x, y = _first_mismatch3(A, A.T)
        violations.append(AxiomViolation("add-commutative", (x, y), f"{x}+{y} != {y}+{x}"))
    _check_assoc(A, "add-associative", violations)
    if not np.array_equal(A[rt.zero], ident):
        x = int(np.argwhere(A[rt.zero] != ident)[0][0])
        violations.append(AxiomViolation("add-identity", (x,), f"0+{x} != {x}"))
    neg = np.asarray(rt.neg, dtype=np.int32)
    if not np.array_equal(A[ident, neg], np.full(n, rt.zero, dtype=np.int32)):
        x = int(np.argwhere(A[ident, neg] != rt.zero)[0][0])
        violations.append(AxiomViolation("add-inverse", (x,), f"{x} has no additive inverse"))
    _check_assoc(M, "mul-associative", violations)
    if not (np.array_equal(M[rt.one], ident) and np.array_equal(M[:, rt.one], ident)):
        bad = np.argwhere(M[rt.one] != ident)
        x = int(bad[0][0]) if len(bad) else int(np.argwhere(M[:, rt.one] != ident)[0][0])
        violations.append(AxiomViolation("mul-identity", (x,), f"1 is not a two-sided identity at {x}"))
    _check_distrib(A, M, violations)
    return RingValidation(ok=not violations, violations=violations)


def _table(r) -> RingTable:
    """Accept a RingTable or anything carrying one (e.g. StarRing)."""
    return getattr(r, "table", r)


def _check_index(t: RingTable, *xs: int) -> None:
    for x in xs:
        if not 0 <= x < t.order:
            raise MalformedRingError(f"element index {x} out of range for order {t.order}")


def elem_add(r, x: int, y: int) -> int:
    t = _table(r)
    _check_index(t, x, y)
    return t.add[x][y]


def elem_mul(r, x: int, y: int) -> int:
    t = _table(r)
    _check_index(t, x, y)
    return t.mul[x][y]


def elem_neg(r, x: int) -> int:
    t = _table(r)
    _check_index(t, x)
    return t.neg[x]


def elem_sub(r, x: int, y: int) -> int:
    t = _table(r)
    _check_index(t, x, y)
    return t.add[x][t.neg[y]]


def elem_pow(r, x: int, k: int) -> int:
    """x**k by repeated table multiplication; k >= 0, with x**0 = 1."""
    t = _table(r)
    _check_index(t, x)
    if k < 0:
        raise MalformedRingError(f"exponent must be non-negative, got {k}")
    acc = t.one
    mul = t.mul
    for _ in range(k):
        acc = mul[acc][x]
    return acc


def characteristic(r) -> int:
    """Additive order of 1: the least k >= 1 with k*1 = 0."""
    t = _table(r)
    add, one, zero = t.add, t.one, t.zero
    x = one
    k = 1
    while x != zero:
        x = add[x][one]
        k += 1
    return k


def additive_order(r, x: int) -> int:
    t = _table(r)
    _check_index(t, x)
    add, zero = t.add, t.zero
    acc = x
    k = 1
    while acc != zero:
        acc = add[acc][x]
        k += 1
    return k


def is_commutative(r) -> tuple[bool, tuple[int, int] | None]:
    """Multiplicative commutativity with a first witness pair on failure."""
    t = _table(r)
    mul = t.mul
    for x in range(t.order):
        row = mul[x]
        for y in range(x + 1, t.order):
            if row[y] != mul[y][x]:
                return False, (x, y)
    return True, None


def ideal_closure(r, gens: Iterable[int]) -> frozenset[int]:
    """Smallest two-sided ideal containing ``gens``.

    Built as the additive closure of all two-sided multiples r*g*s.  With an
    identity present every generator is its own multiple, and negatives are
    reached by repeated addition inside the finite additive group.
    """
    t = _table(r)
    n, add, mul, zero = t.order, t.add, t.mul, t.zero
    gens = list(gens)
    _check_index(t, *gens)
    multiples: set[int] = set()
    for g in gens:
        left = {mul[rr][g] for rr in range(n)}
        for b in left:
            row = mul[b]
            multiples.update(row[s] for s in range(n))
    members = {zero}
    members.update(multiples)
    frontier = list(members)
    while frontier:
        fresh = []
        for a in frontier:
            row = add[a]
            for m in multiples:
                v = row[m]
                if v not in members:
                    members.add(v)
                    fresh.append(v)
        frontier = fresh
    return frozenset(members)
