"""Two-sided ideal enumeration, flags, and quotient construction.

Designed for the small orders the verification corpus uses: lattices are
enumerated exhaustively (default cap 64) and every flag is decided by a
definition-level scan, never inferred from another characterization.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import RingTable, _table, ideal_closure, is_commutative, ring_table
from .errors import CapExceededError, PreconditionError
from .star import Involution, StarRing, _is_subgroup_and_absorbing, star_ring

DEFAULT_IDEAL_CAP = 64


@dataclass
class IdealSet:
    """An ideal as a frozen member set plus optional bookkeeping."""

    members: frozenset[int]
    generators: frozenset[int] | None = None
    flags: dict[str, bool] = field(default_factory=dict)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        out: dict = {"members": sorted(self.members)}
        if self.generators is not None:
            out["generators"] = sorted(self.generators)
        if self.flags:
            out["flags"] = dict(sorted(self.flags.items()))
        return out


def generated_ideal(r, gens) -> IdealSet:
    """Least two-sided ideal containing ``gens``."""
    gens = frozenset(gens)
    return IdealSet(ideal_closure(_table(r), gens), generators=gens)


def _principal_ideals(t: RingTable) -> dict[int, frozenset[int]]:
    commutative, _ = is_commutative(t)
    out: dict[int, frozenset[int]] = {}
    if commutative:
        # With unity, {r*a : r in R} is already additively closed and absorbing.
        for a in range(t.order):
            out[a] = frozenset(t.mul[rr][a] for rr in range(t.order))
    else:
        for a in range(t.order):
            out[a] = ideal_closure(t, [a])
    return out


def sum_ideals(r, i1: frozenset[int] | IdealSet, i2: frozenset[int] | IdealSet) -> frozenset[int]:
    """Setwise sums {x + y}; for two-sided ideals this is again an ideal."""
    t = _table(r)
    m1 = i1.members if isinstance(i1, IdealSet) else i1
    m2 = i2.members if isinstance(i2, IdealSet) else i2
    add = t.add
    out = set()
    for a in m1:
        row = add[a]
        out.update(row[b] for b in m2)
    return frozenset(out)


def intersect_ideals(i1, i2) -> frozenset[int]:
    m1 = i1.members if isinstance(i1, IdealSet) else i1
    m2 = i2.members if isinstance(i2, IdealSet) else i2
    return frozenset(m1 & m2)


def _subgroup_scan_ideals(t: RingTable) -> set[frozenset[int]]:
    """Oracle route: enumerate every additive subgroup by bitmask scan, then
    keep the absorbing ones.  Exponential in the order; callers gate it."""
    n = t.order
    add, mul, zero = t.add, t.mul, t.zero
    found: set[frozenset[int]] = set()
    zero_bit = 1 << zero
    for mask in range(1 << n):
        if not mask & zero_bit:
            continue
        bits = [i for i in range(n) if mask >> i & 1]
        closed = True
        for a in bits:
            row = add[a]
            for b in bits:
                if not mask >> row[b] & 1:
                    closed = False
                    break
            if not closed:
                break
        if not closed:
            continue
        absorbing = True
        for a in bits:
            for x in range(n):
                if not (mask >> mul[x][a] & 1 and mask >> mul[a][x] & 1):
                    absorbing = False
                    break
            if not absorbing:
                break
        if absorbing:
            found.add(frozenset(bits))
    return found


def all_ideals(r, cap: int = DEFAULT_IDEAL_CAP) -> list[IdealSet]:
    """Complete two-sided ideal lattice.

    Principal ideals are closed under pairwise sums to a fixpoint; every ideal
    is a sum of the principal ideals of its members, so the result is
    exhaustive.  For orders <= 16 the lattice is re-derived by the independent
    subgroup-scan route and the two must agree.
    """
    t = _table(r)
    if t.order > cap:
        raise CapExceededError(
            f"ideal enumeration needs order <= {cap}, ring has order {t.order}"
        )
    principal = _principal_ideals(t)
    known: set[frozenset[int]] = set(principal.values())
    worklist = list(known)
    while worklist:
        current = worklist.pop()
        for other in list(known):
            if current <= other or other <= current:
                continue
            s = sum_ideals(t, current, other)
            if s not in known:
                known.add(s)
                worklist.append(s)
    if t.order <= 16:
        scanned = _subgroup_scan_ideals(t)
        if scanned != known:
            raise AssertionError(
                "ideal enumeration mismatch: closure route found "
                f"{len(known)}, subgroup scan found {len(scanned)}"
            )
    ordered = sorted(known, key=lambda m: (len(m), sorted(m)))
    return [IdealSet(m) for m in ordered]


# ---------------------------------------------------------------------------
# flags


def _members(i) -> frozenset[int]:
    return i.members if isinstance(i, IdealSet) else frozenset(i)


def is_maximal(r, ideal, lattice: list[IdealSet] | None = None) -> bool:
    """Proper, with no ideal strictly between it and the whole ring."""
    t = _table(r)
    m = _members(ideal)
    if len(m) == t.order:
        return False
    for other in lattice if lattice is not None else all_ideals(t):
        o = _members(other)
        if m < o and len(o) < t.order:
            return False
    return True


def is_prime(r, ideal) -> tuple[bool, tuple[int, int] | None]:
    """Proper, and a*R*b inside the ideal forces a or b inside."""
    t = _table(r)
    m = _members(ideal)
    if len(m) == t.order:
        return False, None
    mul = t.mul
    outside = [x for x in range(t.order) if x not in m]
    for a in outside:
        rows = [mul[a][rr] for rr in range(t.order)]
        for b in outside:
            if all(mul[ar][b] in m for ar in rows):
                return False, (a, b)
    return True, None


def is_semiprime(r, ideal) -> tuple[bool, int | None]:
    """Proper, and a*R*a inside the ideal forces a inside."""
    t = _table(r)
    m = _members(ideal)
    if len(m) == t.order:
        return False, None
    mul = t.mul
    for a in range(t.order):
        if a in m:
            continue
        if all(mul[mul[a][rr]][a] in m for rr in range(t.order)):
            return False, a
    return True, None


def _power_reaches(t: RingTable, x: int, target: frozenset[int]) -> bool:
    # Walk x, x^2, ... ; the sequence cycles within `order` steps.
    acc = x
    for _ in range(t.order):
        if acc in target:
            return True
        acc = t.mul[acc][x]
    return False


def is_radical_closed(r, ideal) -> tuple[bool, int | None]:
    """Whether a power of a landing in the ideal forces a itself in."""
    t = _table(r)
    m = _members(ideal)
    for a in range(t.order):
        if a in m:
            continue
        if _power_reaches(t, a, m):
            return False, a
    return True, None


def is_primary(r, ideal) -> tuple[bool, tuple[int, int] | None]:
    """Commutative-only: x*y in the ideal forces x in, or some power of y in.

    Proper by convention.  Refused outright on non-commutative rings, where
    the notion is not defined.
    """
    t = _table(r)
    commutative, wit = is_commutative(t)
    if not commutative:
        raise PreconditionError(
            f"primary-ideal test needs a commutative ring; {wit} do not commute"
        )
    m = _members(ideal)
    if len(m) == t.order:
        return False, None
    mul = t.mul
    power_escapes = [not _power_reaches(t, y, m) for y in range(t.order)]
    for x in range(t.order):
        if x in m:
            continue
        row = mul[x]
        for y in range(t.order):
            if power_escapes[y] and row[y] in m:
                return False, (x, y)
    return True, None


def is_submaximal(r, ideal, lattice: list[IdealSet] | None = None) -> tuple[bool, frozenset[int] | None]:
    """Properly below some maximal ideal with nothing strictly between.

    Returns the covering maximal ideal as witness.
    """
    t = _table(r)
    m = _members(ideal)
    lattice = lattice if lattice is not None else all_ideals(t)
    sets = [_members(i) for i in lattice]
    for j in sets:
        if not m < j:
            continue
        if not is_maximal(t, j, lattice):
            continue
        if any(m < k < j for k in sets):
            continue
        return True, j
    return False, None


def annotate_flags(r, ideal: IdealSet, lattice: list[IdealSet] | None = None,
                   star: Involution | None = None) -> IdealSet:
    """Fill in the standard flag block on an IdealSet in place."""
    t = _table(r)
    lattice = lattice if lattice is not None else all_ideals(t)
    ideal.flags["maximal"] = is_maximal(t, ideal, lattice)
    ideal.flags["prime"] = is_prime(t, ideal)[0]
    ideal.flags["semiprime"] = is_semiprime(t, ideal)[0]
    ideal.flags["submaximal"] = is_submaximal(t, ideal, lattice)[0]
    commutative, _ = is_commutative(t)
    if commutative:
        ideal.flags["primary"] = is_primary(t, ideal)[0]
    if star is None and isinstance(r, StarRing):
        star = r.star
    if star is not None:
        ideal.flags["star_closed"] = frozenset(star.perm[x] for x in ideal.members) == ideal.members
    return ideal


# ---------------------------------------------------------------------------
# quotients


@dataclass(frozen=True)
class QuotientRing:
    """R/I with coset bookkeeping.

    ``star`` is present only when the ideal is closed under the involution;
    otherwise the quotient is a plain ring and ``star_dropped`` records why.
    """

    base: StarRing | RingTable
    ideal: frozenset[int]
    reps: tuple[int, ...]
    coset_of: tuple[int, ...]
    ring: RingTable
    star: Involution | None

    @property
    def star_dropped(self) -> bool:
        return self.star is None

    def as_star_ring(self) -> StarRing:
        if self.star is None:
            raise PreconditionError("ideal is not *-closed; quotient carries no involution")
        return StarRing(self.ring, self.star)


def quotient(r: StarRing, ideal) -> QuotientRing:
    """Factor ring by additive cosets; the induced involution is attached only
    when the ideal is *-closed."""
    t = _table(r)
    m = _members(ideal)
    n = t.order
    if not _is_subgroup_and_absorbing(t, m):
        raise PreconditionError(
            f"cannot quotient: {sorted(m)} is not a two-sided ideal")
    add = t.add
    coset_of = [-1] * n
    reps: list[int] = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        idx = len(reps)
        reps.append(x)
        row = add[x]
        for i in m:
            coset_of[row[i]] = idx
    k = len(reps)
    q_add = [[coset_of[add[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    q_mul = [[coset_of[t.mul[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    labels = None
    if t.labels is not None:
        labels = [f"[{t.labels[rep]}]" for rep in reps]
    q_table = ring_table(k, q_add, q_mul, coset_of[t.zero], coset_of[t.one], labels)
    star = None
    if isinstance(r, StarRing):
        perm = r.star.perm
        if frozenset(perm[x] for x in m) == m:
            q_perm = tuple(coset_of[perm[reps[i]]] for i in range(k))
            validated = star_ring(q_table, q_perm)  # re-validate ring + induced star
            return QuotientRing(r, m, tuple(reps), tuple(coset_of), validated.table, validated.star)
    from .core import validate_ring
    from .errors import AxiomError

    check = validate_ring(q_table)
    if not check.ok:
        raise AxiomError("quotient failed ring validation", check.violations)
    return QuotientRing(r, m, tuple(reps), tuple(coset_of), q_table, star)
