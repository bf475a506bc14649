"""Ring constructors: cyclic rings, products, quadratic extensions, truncated
polynomial quotients, and four fixed example rings.

Every constructor routes its output through full validation; builders verify
rather than assume, so a defect in a recipe surfaces as an AxiomError, never
as silent bad data.  Element ordering in parametric constructions is
lexicographic over component indices; the fixed examples keep their source
listing order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import RingTable, is_commutative, max_order, ring_table
from .errors import CapExceededError, ConstructorError, MalformedRingError, PreconditionError
from .star import StarRing, identity_involution, star_ring


def _cap(cap: int | None) -> int:
    return cap if cap is not None else max_order()


def _check_cap(order: int, cap: int | None, what: str) -> None:
    limit = _cap(cap)
    if order > limit:
        raise CapExceededError(f"{what} would have order {order}, over the cap {limit}")


def make_zn(n: int, allow_trivial: bool = False, cap: int | None = None) -> StarRing:
    """Integers mod n with the identity involution (the only one a cyclic
    ring admits)."""
    if not isinstance(n, int) or n < 1:
        raise MalformedRingError(f"modulus must be a positive integer, got {n!r}")
    if n == 1 and not allow_trivial:
        raise MalformedRingError("the zero ring is rejected by default; pass allow_trivial")
    _check_cap(n, cap, f"Z_{n}")
    add = [[(x + y) % n for y in range(n)] for x in range(n)]
    mul = [[(x * y) % n for y in range(n)] for x in range(n)]
    labels = [str(x) for x in range(n)]
    table = ring_table(n, add, mul, 0, 1 % n, labels, cap=cap)
    return star_ring(table, identity_involution(table))


def direct_product(s1: StarRing, s2: StarRing, cap: int | None = None) -> StarRing:
    """Componentwise product; index (i, j) maps to i*order2 + j."""
    n1, n2 = s1.order, s2.order
    n = n1 * n2
    _check_cap(n, cap, "direct product")
    c1 = np.repeat(np.arange(n1), n2)
    c2 = np.tile(np.arange(n2), n1)
    A1 = np.asarray(s1.table.add, dtype=np.int32)
    A2 = np.asarray(s2.table.add, dtype=np.int32)
    M1 = np.asarray(s1.table.mul, dtype=np.int32)
    M2 = np.asarray(s2.table.mul, dtype=np.int32)
    add = A1[np.ix_(c1, c1)] * n2 + A2[np.ix_(c2, c2)]
    mul = M1[np.ix_(c1, c1)] * n2 + M2[np.ix_(c2, c2)]
    p1 = np.asarray(s1.star.perm)
    p2 = np.asarray(s2.star.perm)
    perm = p1[c1] * n2 + p2[c2]
    labels = [f"({s1.label(int(i))},{s2.label(int(j))})" for i, j in zip(c1, c2)]
    zero = s1.zero * n2 + s2.zero
    one = s1.one * n2 + s2.one
    table = ring_table(n, add.tolist(), mul.tolist(), zero, one, labels, cap=cap)
    return star_ring(table, perm.tolist())


@dataclass(frozen=True)
class ExtensionSpec:
    """Parameters for the quadratic extension R[i] with i*i = mu*i + eta.

    mu and eta are element indices of the base and must be fixed by its
    involution; the base must be commutative for the extension to be
    associative.
    """

    base: StarRing
    mu: int
    eta: int


def _ri_label(base: StarRing, a: int, b: int) -> str:
    la, lb = base.label(a), base.label(b)
    if b == base.zero:
        return la
    imag = "i" if lb == "1" else f"{lb}i"
    if a == base.zero:
        return imag
    return f"{la}+{imag}"


def extend_Ri(spec: ExtensionSpec, cap: int | None = None) -> StarRing:
    """Quadratic extension by an adjoined element i with i*i = mu*i + eta.

    Pairs (a, b) stand for a + b*i; the involution acts coefficientwise.
    """
    base = spec.base
    q = base.order
    ok, wit = is_commutative(base.table)
    if not ok:
        raise PreconditionError(f"extension base must be commutative; witness pair {wit}")
    if not (0 <= spec.mu < q and 0 <= spec.eta < q):
        raise MalformedRingError(f"mu/eta must be element indices below {q}")
    perm = base.star.perm
    if perm[spec.mu] != spec.mu or perm[spec.eta] != spec.eta:
        raise PreconditionError("mu and eta must be fixed by the base involution")
    n = q * q
    _check_cap(n, cap, "quadratic extension")
    A = np.asarray(base.table.add, dtype=np.int32)
    M = np.asarray(base.table.mul, dtype=np.int32)
    a_vec = np.repeat(np.arange(q), q)
    b_vec = np.tile(np.arange(q), q)
    ap, aq = a_vec[:, None], a_vec[None, :]
    bp, bq = b_vec[:, None], b_vec[None, :]
    add = A[ap, aq] * q + A[bp, bq]
    bd = M[bp, bq]
    comp1 = A[M[ap, aq], M[bd, spec.eta]]                 # a*c + b*d*eta
    comp2 = A[A[M[ap, bq], M[bp, aq]], M[bd, spec.mu]]    # a*d + b*c + b*d*mu
    mul = comp1 * q + comp2
    p = np.asarray(perm)
    sperm = p[a_vec] * q + p[b_vec]
    labels = [_ri_label(base, int(a), int(b)) for a, b in zip(a_vec, b_vec)]
    zero = base.zero * q + base.zero
    one = base.one * q + base.zero
    table = ring_table(n, add.tolist(), mul.tolist(), zero, one, labels, cap=cap)
    return star_ring(table, sperm.tolist())


def _poly_label(base: StarRing, coeffs: Sequence[int]) -> str:
    terms = []
    for j, c in enumerate(coeffs):
        if c == base.zero:
            continue
        lc = base.label(c)
        if j == 0:
            terms.append(lc)
            continue
        power = "x" if j == 1 else f"x^{j}"
        terms.append(power if lc == "1" else f"{lc}{power}")
    return "+".join(terms) if terms else "0"


def poly_quotient(base: StarRing, n: int, cap: int | None = None) -> StarRing:
    """Truncated polynomial ring: coefficient tuples of length n multiplied by
    convolution with x**n = 0; the involution acts coefficientwise."""
    if not isinstance(n, int) or n < 1:
        raise MalformedRingError(f"truncation degree must be a positive integer, got {n!r}")
    q = base.order
    m = q**n
    _check_cap(m, cap, "polynomial quotient")
    A = np.asarray(base.table.add, dtype=np.int64)
    M = np.asarray(base.table.mul, dtype=np.int64)
    idx = np.arange(m, dtype=np.int64)
    weights = [q ** (n - 1 - j) for j in range(n)]
    digits = [(idx // w) % q for w in weights]
    add = np.zeros((m, m), dtype=np.int64)
    for j in range(n):
        dj = digits[j]
        add += A[dj[:, None], dj[None, :]] * weights[j]
    acc = [np.full((m, m), base.zero, dtype=np.int64) for _ in range(n)]
    for i in range(n):
        di = digits[i][:, None]
        for j in range(n - i):
            term = M[di, digits[j][None, :]]
            acc[i + j] = A[acc[i + j], term]
    mul = np.zeros((m, m), dtype=np.int64)
    for k in range(n):
        mul += acc[k] * weights[k]
    p = np.asarray(base.star.perm, dtype=np.int64)
    sperm = np.zeros(m, dtype=np.int64)
    for j in range(n):
        sperm += p[digits[j]] * weights[j]

    def coeff_of(x: int) -> list[int]:
        return [int((x // w) % q) for w in weights]

    labels = [_poly_label(base, coeff_of(x)) for x in range(m)]
    zero = sum(base.zero * w for w in weights)
    one = base.one * weights[0] + sum(base.zero * w for w in weights[1:])
    table = ring_table(m, add.tolist(), mul.tolist(), int(zero), int(one), labels, cap=cap)
    return star_ring(table, sperm.tolist())


# ---------------------------------------------------------------------------
# fixed example rings


def _build_from_domain(elements, add_fn, mul_fn, star_fn, zero_el, one_el, labels,
                       cap: int | None = None) -> StarRing:
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    if len(index) != n:
        raise MalformedRingError("example domain has duplicate elements")

    def locate(e, what):
        if e not in index:
            raise MalformedRingError(f"example operation leaves the domain at {what}: {e!r}")
        return index[e]

    add = [[locate(add_fn(x, y), f"{x!r}+{y!r}") for y in elements] for x in elements]
    mul = [[locate(mul_fn(x, y), f"{x!r}*{y!r}") for y in elements] for x in elements]
    perm = [locate(star_fn(x), f"{x!r}*") for x in elements]
    table = ring_table(n, add, mul, index[zero_el], index[one_el], labels, cap=cap)
    return star_ring(table, perm)


def _mat2_add(x, y):
    return tuple((a + b) % 2 for a, b in zip(x, y))


def _mat2_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % 2, (a * f + b * h) % 2,
            (c * e + d * g) % 2, (c * f + d * h) % 2)


def _mat_label(flat) -> str:
    a, b, c, d = flat
    return f"[[{a},{b}],[{c},{d}]]"


def example_2_3() -> StarRing:
    """Four specific 2x2 matrices over Z_2 under ordinary matrix operations,
    with the involution (a,b,c,d) -> (a+b, b, a+b+c+d, b+d).

    A commutative Boolean ring whose only projections are 0 and 1: the
    involution swaps the two nontrivial idempotents.
    """
    elements = [(0, 0, 0, 0), (1, 0, 0, 1), (1, 1, 0, 0), (0, 1, 0, 1)]

    def star(x):
        a, b, c, d = x
        return ((a + b) % 2, b, (a + b + c + d) % 2, (b + d) % 2)

    labels = ["0", "1", _mat_label(elements[2]), _mat_label(elements[3])]
    return _build_from_domain(elements, _mat2_add, _mat2_mul, star,
                              elements[0], elements[1], labels)


def example_boolean_like_8() -> StarRing:
    """Eight matrices [[a,b],[c,a]] over Z_2 under the truncated product
    (a,b,c)(a',b',c') = (aa', ab'+ba', ca'+ac'), with the involution swapping
    the off-diagonal entries."""
    elements = [(a, b, c) for a in range(2) for b in range(2) for c in range(2)]

    def add(x, y):
        return tuple((u + v) % 2 for u, v in zip(x, y))

    def mul(x, y):
        a, b, c = x
        e, f, g = y
        return ((a * e) % 2, (a * f + b * e) % 2, (c * e + a * g) % 2)

    def star(x):
        a, b, c = x
        return (a, c, b)

    labels = [f"[[{a},{b}],[{c},{a}]]" for a, b, c in elements]
    return _build_from_domain(elements, add, mul, star, (0, 0, 0), (1, 0, 0), labels)


def example_transpose_8() -> StarRing:
    """Eight specific 2x2 matrices over Z_2 under ordinary matrix operations,
    with transposition as the involution.

    Closed under both operations but non-commutative; its defect products
    (x - x^2)(y - y^2) all vanish even though two idempotents fail to be
    projections."""
    elements = [
        (0, 0, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (1, 1, 0, 0),
        (0, 0, 1, 1), (1, 0, 1, 0), (0, 1, 0, 1), (1, 1, 1, 1),
    ]

    def star(x):
        a, b, c, d = x
        return (a, c, b, d)

    labels = [_mat_label(e) for e in elements]
    return _build_from_domain(elements, _mat2_add, _mat2_mul, star,
                              elements[0], elements[1], labels)


def example_triangular_z4() -> StarRing:
    """Upper-triangular matrices [[a, 2b],[0, c]] over Z_4 (b in {0,1} encodes
    the even off-diagonal entry), with involution [[a,2b],[0,c]] -> [[c,-2b],[0,a]].

    Order 32, strongly nil clean but non-commutative."""
    elements = [(a, b, c) for a in range(4) for b in range(2) for c in range(4)]

    def add(x, y):
        return ((x[0] + y[0]) % 4, (x[1] + y[1]) % 2, (x[2] + y[2]) % 4)

    def mul(x, y):
        a, b, c = x
        e, f, g = y
        # [[a,2b],[0,c]]*[[e,2f],[0,g]] = [[ae, 2(af+bg)],[0, cg]]
        return ((a * e) % 4, (a * f + b * g) % 2, (c * g) % 4)

    def star(x):
        a, b, c = x
        return (c, b, a)  # -2b = 2b mod 4

    labels = [f"[[{a},{2 * b}],[0,{c}]]" for a, b, c in elements]
    return _build_from_domain(elements, add, mul, star, (0, 0, 0), (1, 0, 1), labels)


EXAMPLES: dict[str, Callable[[], StarRing]] = {
    "2.3": example_2_3,
    "boolean-like-8": example_boolean_like_8,
    "transpose-8": example_transpose_8,
    "triangular-z4": example_triangular_z4,
}


# ---------------------------------------------------------------------------
# constructor expressions


def _split_args(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ConstructorError(f"unbalanced parentheses in {text!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ConstructorError(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _strip_parens(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(text) - 1:
                    return text
        text = text[1:-1].strip()
    return text


def _int_arg(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConstructorError(f"{what} must be an integer, got {value!r}") from None


def build(expr: str, cap: int | None = None) -> StarRing:
    """Build a *-ring from a constructor expression.

    Grammar: ``zn:N``, ``product:EXPR,EXPR[,EXPR...]``,
    ``ri:EXPR,mu=I,eta=J``, ``poly:EXPR,n=K``, ``example:NAME``.
    Sub-expressions containing commas must be parenthesized.
    """
    expr = _strip_parens(expr)
    if ":" not in expr:
        raise ConstructorError(f"constructor expression needs kind:args, got {expr!r}")
    kind, rest = expr.split(":", 1)
    kind = kind.strip().lower()
    if kind == "zn":
        return make_zn(_int_arg(rest.strip(), "zn modulus"), cap=cap)
    if kind == "example":
        key = rest.strip()
        if key not in EXAMPLES:
            raise ConstructorError(
                f"unknown example {key!r}; available: {', '.join(sorted(EXAMPLES))}"
            )
        return EXAMPLES[key]()
    args = _split_args(rest)
    positional = [a for a in args if "=" not in a]
    kwargs = {}
    for a in args:
        if "=" in a:
            k, v = a.split("=", 1)
            kwargs[k.strip()] = v.strip()
    if kind == "product":
        if len(positional) < 2 or kwargs:
            raise ConstructorError("product needs at least two sub-constructors")
        rings = [build(p, cap=cap) for p in positional]
        out = rings[0]
        for nxt in rings[1:]:
            out = direct_product(out, nxt, cap=cap)
        return out
    if kind == "ri":
        if len(positional) != 1 or set(kwargs) != {"mu", "eta"}:
            raise ConstructorError("ri needs a base constructor plus mu= and eta=")
        base = build(positional[0], cap=cap)
        return extend_Ri(
            ExtensionSpec(base, _int_arg(kwargs["mu"], "mu"), _int_arg(kwargs["eta"], "eta")),
            cap=cap,
        )
    if kind == "poly":
        if len(positional) != 1 or set(kwargs) != {"n"}:
            raise ConstructorError("poly needs a base constructor plus n=")
        base = build(positional[0], cap=cap)
        return poly_quotient(base, _int_arg(kwargs["n"], "n"), cap=cap)
    raise ConstructorError(f"unknown constructor kind {kind!r}")
