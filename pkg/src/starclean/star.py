"""Involutions and the structural subsets they induce.

A *-ring is a ring with an additive, anti-multiplicative, self-inverse
permutation of its elements.  On top of that live the sets every classifier
needs: idempotents, projections, nilpotents, units, and the Jacobson radical.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import RingTable, _table, ideal_closure, validate_ring
from .errors import AxiomError, MalformedRingError


@dataclass(frozen=True)
class Involution:
    """A *-map stored as a permutation of element indices."""

    perm: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.perm[x]

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))


@dataclass(frozen=True)
class StarRing:
    """A validated ring table together with a validated involution."""

    table: RingTable
    star: Involution

    @property
    def order(self) -> int:
        return self.table.order

    @property
    def zero(self) -> int:
        return self.table.zero

    @property
    def one(self) -> int:
        return self.table.one

    def label(self, x: int) -> str:
        return self.table.label(x)


def validate_involution(rt: RingTable, perm: Sequence[int]) -> list:
    """Involution axioms scanned over the whole table.

    Returns a list of AxiomViolation-shaped dicts (empty when valid); a
    non-bijective or mis-sized map is malformed rather than axiom-violating.
    """
    from .core import AxiomViolation

    n = rt.order
    perm = tuple(int(v) for v in perm)
    if len(perm) != n:
        raise MalformedRingError(f"involution must have length {n}, got {len(perm)}")
    if sorted(perm) != list(range(n)):
        raise MalformedRingError("involution table is not a bijection")
    P = np.asarray(perm, dtype=np.int32)
    A = np.asarray(rt.add, dtype=np.int32)
    M = np.asarray(rt.mul, dtype=np.int32)
    violations = []
    ident = np.arange(n, dtype=np.int32)
    if not np.array_equal(P[P], ident):
        x = int(np.argwhere(P[P] != ident)[0][0])
        violations.append(AxiomViolation("star-involutive", (x,), f"(({x})*)* != {x}"))
    lhs = P[A]
    rhs = A[np.ix_(perm, perm)]
    if not np.array_equal(lhs, rhs):
        idx = np.argwhere(lhs != rhs)[0]
        x, y = int(idx[0]), int(idx[1])
        violations.append(AxiomViolation("star-additive", (x, y), f"({x}+{y})* != {x}*+{y}*"))
    lhs = P[M]
    rhs = M[np.ix_(perm, perm)].T
    if not np.array_equal(lhs, rhs):
        idx = np.argwhere(lhs != rhs)[0]
        x, y = int(idx[0]), int(idx[1])
        violations.append(AxiomViolation("star-antimultiplicative", (x, y), f"({x}*{y})* != {y}*{x}*"))
    return violations


def star_ring(rt: RingTable, perm: Sequence[int], validate: bool = True) -> StarRing:
    """The only gate through which downstream code receives a *-ring."""
    perm = tuple(int(v) for v in perm)
    if validate:
        ring_check = validate_ring(rt)
        if not ring_check.ok:
            raise AxiomError(
                "ring axioms violated: " + ", ".join(v.law for v in ring_check.violations),
                ring_check.violations,
            )
        star_violations = validate_involution(rt, perm)
        if star_violations:
            raise AxiomError(
                "involution axioms violated: " + ", ".join(v.law for v in star_violations),
                star_violations,
            )
    elif len(perm) != rt.order or sorted(perm) != list(range(rt.order)):
        raise MalformedRingError("involution table is not a bijection")
    return StarRing(rt, Involution(perm))


def identity_involution(rt: RingTable) -> tuple[int, ...]:
    return tuple(range(rt.order))


# ---------------------------------------------------------------------------
# structural subsets


def idempotents(r) -> frozenset[int]:
    """All x with x*x = x."""
    t = _table(r)
    return frozenset(x for x in range(t.order) if t.mul[x][x] == x)


def projections(r: StarRing) -> frozenset[int]:
    """Idempotents fixed by the involution."""
    perm = r.star.perm
    return frozenset(e for e in idempotents(r) if perm[e] == e)


def nilpotents(r) -> tuple[frozenset[int], dict[int, int]]:
    """The nil set together with each member's nil index.

    Power sequences over a finite ring cycle within ``order`` steps, so
    bounding the walk there is exhaustive.
    """
    t = _table(r)
    mul, zero = t.mul, t.zero
    members: set[int] = set()
    index: dict[int, int] = {}
    for x in range(t.order):
        acc = x
        for k in range(1, t.order + 1):
            if acc == zero:
                members.add(x)
                index[x] = k
                break
            acc = mul[acc][x]
    return frozenset(members), index


def units(r) -> frozenset[int]:
    """Elements with a two-sided multiplicative inverse."""
    t = _table(r)
    mul, one = t.mul, t.one
    out = set()
    for x in range(t.order):
        row = mul[x]
        for y in range(t.order):
            if row[y] == one and mul[y][x] == one:
                out.add(x)
                break
    return frozenset(out)


def jacobson_radical(r, unit_set: frozenset[int] | None = None) -> frozenset[int]:
    """Quasi-regularity criterion: x is in the radical iff 1 - r*x is a unit
    for every r."""
    t = _table(r)
    u = units(r) if unit_set is None else unit_set
    add, mul, neg, one = t.add, t.mul, t.neg, t.one
    out = set()
    for x in range(t.order):
        col_ok = True
        for rr in range(t.order):
            if add[one][neg[mul[rr][x]]] not in u:
                col_ok = False
                break
        if col_ok:
            out.add(x)
    return frozenset(out)


@dataclass
class StructuralSets:
    idempotents: frozenset[int]
    projections: frozenset[int]
    nilpotents: frozenset[int]
    nil_index: dict[int, int]
    units: frozenset[int]
    jacobson: frozenset[int]

    def to_dict(self) -> dict:
        return {
            "idempotents": sorted(self.idempotents),
            "projections": sorted(self.projections),
            "nilpotents": sorted(self.nilpotents),
            "nil_index": [[x, self.nil_index[x]] for x in sorted(self.nil_index)],
            "units": sorted(self.units),
            "jacobson": sorted(self.jacobson),
        }


def structural_sets(r: StarRing) -> StructuralSets:
    nils, nil_index = nilpotents(r)
    u = units(r)
    return StructuralSets(
        idempotents=idempotents(r),
        projections=projections(r),
        nilpotents=nils,
        nil_index=nil_index,
        units=u,
        jacobson=jacobson_radical(r, u),
    )


# ---------------------------------------------------------------------------
# ring-level predicates that need no ideal machinery


def is_boolean(r) -> tuple[bool, int | None]:
    """Every element idempotent; witness is the first non-idempotent."""
    t = _table(r)
    for x in range(t.order):
        if t.mul[x][x] != x:
            return False, x
    return True, None


def periodicity_witnesses(r) -> dict[int, tuple[int, int]]:
    """For each x the first pair of exponents m < n with x**m = x**n.

    Finite rings are always periodic; the witnesses make that checkable
    rather than assumed.
    """
    t = _table(r)
    mul = t.mul
    out: dict[int, tuple[int, int]] = {}
    for x in range(t.order):
        seen: dict[int, int] = {}
        acc = x
        k = 1
        while acc not in seen:
            seen[acc] = k
            acc = mul[acc][x]
            k += 1
        out[x] = (seen[acc], k)
    return out


def is_periodic(r) -> tuple[bool, dict[int, tuple[int, int]]]:
    witnesses = periodicity_witnesses(r)
    return len(witnesses) == _table(r).order, witnesses


def is_abelian_ring(r, idem: frozenset[int] | None = None) -> tuple[bool, tuple[int, int] | None]:
    """All idempotents central; witness is a non-commuting (e, x) pair."""
    t = _table(r)
    mul = t.mul
    for e in sorted(idem if idem is not None else idempotents(r)):
        row = mul[e]
        for x in range(t.order):
            if row[x] != mul[x][e]:
                return False, (e, x)
    return True, None


def _is_subgroup_and_absorbing(t: RingTable, members: frozenset[int]) -> bool:
    if t.zero not in members:
        return False
    add, mul = t.add, t.mul
    for a in members:
        row = add[a]
        if any(row[b] not in members for b in members):
            return False
    for a in members:
        for x in range(t.order):
            if mul[x][a] not in members or mul[a][x] not in members:
                return False
    return True


def is_local(r, unit_set: frozenset[int] | None = None) -> bool:
    """Local iff the non-units form a (two-sided) ideal, decided table-wise."""
    t = _table(r)
    u = units(r) if unit_set is None else unit_set
    non_units = frozenset(set(range(t.order)) - u)
    return _is_subgroup_and_absorbing(t, non_units)


def is_absolutely_local(r, radical: frozenset[int] | None = None) -> bool:
    """Local with a nonzero radical in which every nonzero element generates
    the whole radical.

    The nonzero-radical requirement keeps division rings out: with J = 0 the
    generation condition would hold vacuously, which breaks the submaximal
    dichotomy this predicate exists to support.
    """
    t = _table(r)
    u = units(r)
    if not is_local(r, u):
        return False
    j = jacobson_radical(r, u) if radical is None else radical
    if j == frozenset({t.zero}):
        return False
    for x in j:
        if x == t.zero:
            continue
        if ideal_closure(t, [x]) != j:
            return False
    return True
