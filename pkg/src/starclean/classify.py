"""Ring-class predicates and the classification report.

Every predicate here is decided by a scan straight out of its definition.
None of them lean on the equivalences the theorem harness verifies; that
separation is what makes the harness's biconditional checks meaningful.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import characteristic, is_commutative
from .star import (
    StarRing,
    idempotents,
    is_abelian_ring,
    is_absolutely_local,
    is_boolean,
    is_local,
    jacobson_radical,
    nilpotents,
    periodicity_witnesses,
    projections,
    units,
)

PREDICATE_NAMES = (
    "boolean",
    "star_boolean",
    "boolean_like",
    "star_boolean_like",
    "commutative",
    "abelian",
    "local",
    "absolutely_local",
    "periodic",
    "idempotents_are_projections",
    "nil_set_is_ideal",
    "nilpotent_products_vanish",
    "jacobson_is_nil",
    "strongly_nil_star_clean",
    "uniquely_strongly_nil_star_clean",
    "uniquely_nil_clean",
    "strongly_nil_clean",
    "strongly_star_clean",
    "strongly_J_star_clean",
)


@dataclass
class Decomposition:
    """Per-element additive splittings x = e + w.

    kind is one of nil-star (projection + commuting nilpotent), nil
    (idempotent + commuting nilpotent), J-star (projection + radical member),
    star-clean (projection + commuting unit).
    """

    kind: str
    parts: dict[int, tuple[int, int]]
    unique: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "unique": self.unique,
            "parts": [[x, e, w] for x, (e, w) in sorted(self.parts.items())],
        }


class RingFacts:
    """Lazily computed structural data and predicates for one *-ring.

    The theorem harness shares one instance per corpus member so repeated
    checks reuse the scans.
    """

    def __init__(self, ring: StarRing):
        self.ring = ring
        self.table = ring.table

    # -- structure ---------------------------------------------------------

    @cached_property
    def order(self) -> int:
        return self.table.order

    @cached_property
    def idempotent_set(self) -> frozenset[int]:
        return idempotents(self.ring)

    @cached_property
    def projection_set(self) -> frozenset[int]:
        return projections(self.ring)

    @cached_property
    def _nil(self) -> tuple[frozenset[int], dict[int, int]]:
        return nilpotents(self.ring)

    @property
    def nilpotent_set(self) -> frozenset[int]:
        return self._nil[0]

    @property
    def nil_index(self) -> dict[int, int]:
        return self._nil[1]

    @cached_property
    def unit_set(self) -> frozenset[int]:
        return units(self.ring)

    @cached_property
    def jacobson_set(self) -> frozenset[int]:
        return jacobson_radical(self.ring, self.unit_set)

    @cached_property
    def characteristic(self) -> int:
        return characteristic(self.ring)

    @cached_property
    def periodicity(self) -> dict[int, tuple[int, int]]:
        return periodicity_witnesses(self.ring)

    # -- plain predicates ---------------------------------------------------

    @cached_property
    def commutative(self) -> tuple[bool, tuple[int, int] | None]:
        return is_commutative(self.table)

    @cached_property
    def boolean(self) -> tuple[bool, int | None]:
        return is_boolean(self.table)

    @cached_property
    def star_boolean(self) -> tuple[bool, dict | None]:
        """Every element is a projection."""
        t = self.table
        perm = self.ring.star.perm
        for x in range(t.order):
            if t.mul[x][x] != x:
                return False, {"element": x, "reason": "not idempotent"}
            if perm[x] != x:
                return False, {"element": x, "reason": "not fixed by the involution"}
        return True, None

    @cached_property
    def boolean_like(self) -> tuple[bool, dict | None]:
        """Commutative, characteristic 2, and a*b*(1+a)*(1+b) = 0 throughout."""
        t = self.table
        ok, wit = self.commutative
        if not ok:
            return False, {"reason": "not commutative", "pair": list(wit)}
        if self.characteristic != 2:
            return False, {"reason": "characteristic", "characteristic": self.characteristic}
        add, mul, one = t.add, t.mul, t.one
        for a in range(t.order):
            ap = add[one][a]
            for b in range(t.order):
                if mul[mul[mul[a][b]][ap]][add[one][b]] != t.zero:
                    return False, {"reason": "product", "pair": [a, b]}
        return True, None

    @cached_property
    def star_boolean_like(self) -> tuple[bool, dict | None]:
        """Idempotents all projections, and (a - a^2)(b - b^2) = 0 throughout."""
        t = self.table
        ok, wit = self.idempotents_are_projections
        if not ok:
            return False, {"reason": "idempotent is not a projection", "element": wit}
        add, mul, neg = t.add, t.mul, t.neg
        defect = [add[x][neg[mul[x][x]]] for x in range(t.order)]  # x - x^2
        for a in range(t.order):
            da = defect[a]
            row = mul[da]
            for b in range(t.order):
                if row[defect[b]] != t.zero:
                    return False, {"reason": "defect product", "pair": [a, b]}
        return True, None

    @cached_property
    def abelian(self) -> tuple[bool, tuple[int, int] | None]:
        return is_abelian_ring(self.table, self.idempotent_set)

    @cached_property
    def local(self) -> bool:
        return is_local(self.table, self.unit_set)

    @cached_property
    def absolutely_local(self) -> bool:
        return is_absolutely_local(self.table, self.jacobson_set)

    @cached_property
    def periodic(self) -> bool:
        return len(self.periodicity) == self.order

    @cached_property
    def idempotents_are_projections(self) -> tuple[bool, int | None]:
        for e in sorted(self.idempotent_set):
            if e not in self.projection_set:
                return False, e
        return True, None

    @cached_property
    def nil_set_is_ideal(self) -> tuple[bool, dict | None]:
        """Whether the nilpotents form a two-sided ideal; scanned directly."""
        t = self.table
        nil = self.nilpotent_set
        add, mul = t.add, t.mul
        for a in sorted(nil):
            row = add[a]
            for b in sorted(nil):
                if row[b] not in nil:
                    return False, {"reason": "sum escapes", "pair": [a, b]}
        for a in sorted(nil):
            for x in range(t.order):
                if mul[x][a] not in nil:
                    return False, {"reason": "left multiple escapes", "pair": [x, a]}
                if mul[a][x] not in nil:
                    return False, {"reason": "right multiple escapes", "pair": [a, x]}
        return True, None

    @cached_property
    def nilpotent_products_vanish(self) -> tuple[bool, tuple[int, int] | None]:
        t = self.table
        nil = sorted(self.nilpotent_set)
        for a in nil:
            row = t.mul[a]
            for b in nil:
                if row[b] != t.zero:
                    return False, (a, b)
        return True, None

    @cached_property
    def jacobson_is_nil(self) -> tuple[bool, int | None]:
        for x in sorted(self.jacobson_set):
            if x not in self.nilpotent_set:
                return False, x
        return True, None

    # -- decomposition predicates -------------------------------------------

    def _splittings(self, x: int, candidates, member_set, require_commute: bool) -> list[tuple[int, int]]:
        """All e in candidates with x = e + w, w in member_set, optionally e*w = w*e."""
        t = self.table
        add, neg, mul = t.add, t.neg, t.mul
        out = []
        for e in candidates:
            w = add[x][neg[e]]
            if w not in member_set:
                continue
            if require_commute and mul[e][w] != mul[w][e]:
                continue
            out.append((e, w))
        return out

    def _scan_clean(self, kind: str, candidates, member_set, require_commute: bool,
                    unique: bool) -> tuple[bool, Decomposition | None, dict | None]:
        candidates = sorted(candidates)
        parts: dict[int, tuple[int, int]] = {}
        all_unique = True
        for x in range(self.order):
            found = self._splittings(x, candidates, member_set, require_commute)
            if not found:
                return False, None, {"element": x, "reason": "no splitting"}
            if len(found) > 1:
                all_unique = False
                if unique:
                    return False, None, {"element": x, "reason": "multiple splittings",
                                         "count": len(found)}
            parts[x] = found[0]
        return True, Decomposition(kind, parts, all_unique), None

    @cached_property
    def strongly_nil_star_clean(self) -> tuple[bool, Decomposition | None, dict | None]:
        """Each element a projection plus a commuting nilpotent."""
        return self._scan_clean("nil-star", self.projection_set, self.nilpotent_set,
                                require_commute=True, unique=False)

    @cached_property
    def uniquely_strongly_nil_star_clean(self) -> tuple[bool, Decomposition | None, dict | None]:
        return self._scan_clean("nil-star", self.projection_set, self.nilpotent_set,
                                require_commute=True, unique=True)

    @cached_property
    def uniquely_nil_clean(self) -> tuple[bool, Decomposition | None, dict | None]:
        """Each element a unique idempotent plus a nilpotent; no commuting asked."""
        return self._scan_clean("nil", self.idempotent_set, self.nilpotent_set,
                                require_commute=False, unique=True)

    @cached_property
    def strongly_nil_clean(self) -> tuple[bool, Decomposition | None, dict | None]:
        return self._scan_clean("nil", self.idempotent_set, self.nilpotent_set,
                                require_commute=True, unique=False)

    @cached_property
    def strongly_star_clean(self) -> tuple[bool, Decomposition | None, dict | None]:
        return self._scan_clean("star-clean", self.projection_set, self.unit_set,
                                require_commute=True, unique=False)

    @cached_property
    def strongly_J_star_clean(self) -> tuple[bool, Decomposition | None, dict | None]:
        """Each element a unique projection plus a radical member.

        The commuting condition is reported alongside the witness but is not
        part of the predicate.
        """
        ok, dec, ce = self._scan_clean("J-star", self.projection_set, self.jacobson_set,
                                       require_commute=False, unique=True)
        if not ok:
            return ok, dec, ce
        mul = self.table.mul
        non_commuting = [x for x, (e, w) in sorted(dec.parts.items()) if mul[e][w] != mul[w][e]]
        return ok, dec, {"non_commuting_elements": non_commuting} if non_commuting else None

    # -- harness conveniences -------------------------------------------------

    def predicate(self, name: str) -> bool:
        value = getattr(self, name)
        if isinstance(value, tuple):
            return bool(value[0])
        return bool(value)


def _label(s: StarRing, x: int) -> str:
    return s.label(x)


def _with_labels(s: StarRing, payload):
    """Recursively attach labels to element/pair fields for readability."""
    if payload is None:
        return None
    if isinstance(payload, dict):
        out = dict(payload)
        if "element" in out and isinstance(out["element"], int):
            out["label"] = _label(s, out["element"])
        if "pair" in out and isinstance(out["pair"], list):
            out["pair_labels"] = [_label(s, v) for v in out["pair"]]
        return out
    if isinstance(payload, tuple) and len(payload) == 2:
        return {"pair": list(payload), "pair_labels": [_label(s, v) for v in payload]}
    if isinstance(payload, int):
        return {"element": payload, "label": _label(s, payload)}
    return payload


def classify(s: StarRing, facts: RingFacts | None = None) -> dict:
    """Full classification report for one validated *-ring.

    The report is deterministic and self-contained: predicates, witnesses for
    positive structural claims, counterexamples for every failed predicate,
    and the structural summary.  Identity is the content hash of the ring
    spec, so identical rings yield identical reports.
    """
    from .ringio import ring_hash

    f = facts if facts is not None else RingFacts(s)
    predicates: dict[str, bool] = {}
    witnesses: dict[str, object] = {}
    counterexamples: dict[str, object] = {}

    def record(name: str, ok: bool, witness=None, ce=None):
        predicates[name] = bool(ok)
        if ok and witness is not None:
            witnesses[name] = witness
        if not ok:
            counterexamples[name] = ce if ce is not None else {}

    ok, wit = f.boolean
    record("boolean", ok, ce=_with_labels(s, wit))
    ok, wit = f.star_boolean
    record("star_boolean", ok, ce=_with_labels(s, wit))
    ok, wit = f.boolean_like
    record("boolean_like", ok, ce=_with_labels(s, wit))
    ok, wit = f.star_boolean_like
    record("star_boolean_like", ok, ce=_with_labels(s, wit))
    ok, wit = f.commutative
    record("commutative", ok, ce=_with_labels(s, wit))
    ok, wit = f.abelian
    record("abelian", ok, ce=_with_labels(s, wit))
    record("local", f.local, ce={})
    record("absolutely_local", f.absolutely_local, ce={})
    record("periodic", f.periodic,
           witness=[[x, m, n] for x, (m, n) in sorted(f.periodicity.items())])
    ok, wit = f.idempotents_are_projections
    record("idempotents_are_projections", ok, ce=_with_labels(s, wit))
    ok, wit = f.nil_set_is_ideal
    record("nil_set_is_ideal", ok, ce=_with_labels(s, wit))
    ok, wit = f.nilpotent_products_vanish
    record("nilpotent_products_vanish", ok, ce=_with_labels(s, wit))
    ok, wit = f.jacobson_is_nil
    record("jacobson_is_nil", ok, ce=_with_labels(s, wit))

    for name in ("strongly_nil_star_clean", "uniquely_strongly_nil_star_clean",
                 "uniquely_nil_clean", "strongly_nil_clean", "strongly_star_clean"):
        ok, dec, ce = getattr(f, name)
        record(name, ok, witness=dec.to_dict() if dec else None, ce=_with_labels(s, ce))

    ok, dec, extra = f.strongly_J_star_clean
    if ok:
        witness = dec.to_dict()
        witness["commuting"] = extra is None
        if extra is not None:
            witness["non_commuting_elements"] = extra["non_commuting_elements"]
        record("strongly_J_star_clean", True, witness=witness)
    else:
        record("strongly_J_star_clean", False, ce=_with_labels(s, extra))

    structure = {
        "characteristic": f.characteristic,
        "idempotents": sorted(f.idempotent_set),
        "projections": sorted(f.projection_set),
        "nilpotents": sorted(f.nilpotent_set),
        "nil_index": [[x, k] for x, k in sorted(f.nil_index.items())],
        "units": sorted(f.unit_set),
        "jacobson": sorted(f.jacobson_set),
        "counts": {
            "idempotents": len(f.idempotent_set),
            "projections": len(f.projection_set),
            "nilpotents": len(f.nilpotent_set),
            "units": len(f.unit_set),
            "jacobson": len(f.jacobson_set),
        },
    }
    return {
        "ring": {"hash": ring_hash(s), "order": f.order},
        "predicates": predicates,
        "witnesses": witnesses,
        "counterexamples": counterexamples,
        "structure": structure,
    }
