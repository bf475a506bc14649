"""Ring constructors and the expression parser."""
from __future__ import annotations

import pytest

from starclean import (
    EXAMPLES,
    CapExceededError,
    ConstructorError,
    ExtensionSpec,
    MalformedRingError,
    PreconditionError,
    RingFacts,
    build,
    direct_product,
    extend_Ri,
    is_boolean,
    is_local,
    make_zn,
    poly_quotient,
    units,
)


class TestMakeZn:
    def test_rejects_zero_ring_by_default(self):
        with pytest.raises(MalformedRingError):
            make_zn(1)
        assert make_zn(1, allow_trivial=True).order == 1

    def test_rejects_nonpositive(self):
        with pytest.raises(MalformedRingError):
            make_zn(0)
        with pytest.raises(MalformedRingError):
            make_zn(-3)

    def test_identity_involution_and_labels(self):
        s = make_zn(5)
        assert s.star.is_identity
        assert s.table.labels == ("0", "1", "2", "3", "4")


class TestDirectProduct:
    def test_product_isomorphic_to_z6(self, zn):
        s = direct_product(zn(2), zn(3))
        facts = RingFacts(s)
        assert s.order == 6
        assert facts.characteristic == 6
        assert len(facts.unit_set) == 2
        assert len(facts.idempotent_set) == 4

    def test_componentwise_labels(self, zn):
        s = direct_product(zn(2), zn(3))
        assert s.table.labels[5] == "(1,2)"

    def test_star_acts_componentwise(self, zn):
        s = direct_product(zn(2), zn(4))
        assert s.star.is_identity

    def test_cap(self, zn):
        with pytest.raises(CapExceededError):
            direct_product(make_zn(100), make_zn(100))


class TestQuadraticExtension:
    def test_gf4_from_z2(self, zn):
        # i*i = i + 1 over Z_2 gives the 4-element field
        s = build("ri:zn:2,mu=1,eta=1")
        assert s.order == 4
        assert units(s) == frozenset({1, 2, 3})
        assert is_local(s)
        assert not is_boolean(s)[0]

    def test_dual_numbers_match_truncated_polynomials(self, zn):
        # i*i = 0 is the same ring as x^2 = 0 with the same element encoding
        for q in (2, 3, 4):
            base = zn(q)
            via_i = extend_Ri(ExtensionSpec(base, 0, 0))
            via_x = poly_quotient(base, 2)
            assert via_i.table.add == via_x.table.add
            assert via_i.table.mul == via_x.table.mul
            assert via_i.star.perm == via_x.star.perm

    def test_element_encoding_is_base_major(self, zn):
        s = extend_Ri(ExtensionSpec(zn(3), 0, 0))
        # index of a + b*i is 3a + b; (1 + 2i) * (1 + 2i) = 1 + 4i + 4i^2 = 1 + i
        t = s.table
        x = 3 * 1 + 2
        assert t.mul[x][x] == 3 * 1 + 1

    def test_star_extends_base_star_componentwise(self, zn):
        from starclean import direct_product, star_ring

        base = star_ring(direct_product(zn(2), zn(2)).table, [0, 2, 1, 3])
        s = extend_Ri(ExtensionSpec(base, 0, 0))
        # (a + b*i)* = a* + b**i; element 0 + (0,1)*i has index 1, and its
        # image 0 + (1,0)*i has index 2
        assert s.star(1) == 2
        # identity base star over Z_4 stays the identity on the extension
        assert build("ri:zn:4,mu=0,eta=0").star.is_identity

    def test_mu_eta_out_of_range(self, zn):
        with pytest.raises(MalformedRingError):
            extend_Ri(ExtensionSpec(zn(3), 5, 0))

    def test_noncommutative_base_rejected(self, examples):
        with pytest.raises(PreconditionError):
            extend_Ri(ExtensionSpec(examples["transpose-8"], 0, 0))

    def test_non_star_fixed_parameters_rejected(self, zn):
        from starclean import star_ring
        from starclean import direct_product

        base = direct_product(zn(2), zn(2))
        swapped = star_ring(base.table, [0, 2, 1, 3])
        with pytest.raises(PreconditionError):
            extend_Ri(ExtensionSpec(swapped, 1, 0))  # 1 = (0,1) is not star-fixed


class TestPolyQuotient:
    def test_degree_one_is_the_base(self, zn):
        base = zn(6)
        s = poly_quotient(base, 1)
        assert s.table.add == base.table.add
        assert s.table.mul == base.table.mul

    def test_nilpotent_generator(self, zn):
        s = poly_quotient(zn(3), 3)
        assert s.order == 27
        facts = RingFacts(s)
        # x has index 3^1 = 3 wait -- coefficient c_1 weight is 3^(3-1-1)=3
        x = 3
        t = s.table
        x2 = t.mul[x][x]
        assert t.mul[x2][x] == t.zero  # x^3 = 0
        assert x in facts.nilpotent_set

    def test_constant_embedding_preserves_one(self, zn):
        s = poly_quotient(zn(5), 2)
        t = s.table
        assert t.labels[t.one] == "1"
        assert t.mul[t.one][7] == 7

    def test_degree_zero_rejected(self, zn):
        with pytest.raises((MalformedRingError, ConstructorError)):
            poly_quotient(zn(3), 0)

    def test_cap(self, zn):
        with pytest.raises(CapExceededError):
            poly_quotient(zn(10), 5)


class TestExamples:
    def test_catalog(self):
        assert set(EXAMPLES) == {"2.3", "boolean-like-8", "transpose-8", "triangular-z4"}

    def test_orders(self, examples):
        assert examples["2.3"].order == 4
        assert examples["boolean-like-8"].order == 8
        assert examples["transpose-8"].order == 8
        assert examples["triangular-z4"].order == 32

    def test_all_pass_the_validation_gate(self):
        # builders route through star_ring(validate=True); reaching here
        # means ring and involution axioms held
        for name in EXAMPLES:
            s = build(f"example:{name}")
            assert s.order >= 4

    def test_triangular_labels_read_as_matrices(self, examples):
        t = examples["triangular-z4"].table
        assert t.labels[t.one] == "[[1,0],[0,1]]"
        assert t.labels[1] == "[[0,0],[0,1]]"


class TestExpressionParser:
    def test_zn(self):
        assert build("zn:7").order == 7

    def test_product_folds_left(self):
        s = build("product:zn:2,zn:2,zn:2")
        assert s.order == 8
        assert is_boolean(s)[0]

    def test_nested_parens(self):
        s = build("product:(product:zn:2,zn:3),zn:5")
        assert s.order == 30

    def test_ri_with_keywords(self):
        s = build("ri:zn:2,mu=1,eta=1")
        assert s.order == 4

    def test_poly_keyword(self):
        assert build("poly:zn:2,n=3").order == 8

    def test_example(self):
        assert build("example:2.3").order == 4

    @pytest.mark.parametrize("expr", [
        "zn",               # missing argument
        "zn:abc",           # non-integer
        "zn:",              # empty argument
        "unknown:3",        # unknown kind
        "example:nope",     # unknown example
        "product:zn:2",     # fewer than two factors
        "ri:zn:2,mu=1",     # missing eta
        "ri:zn:2,eta=1",    # missing mu
        "poly:zn:2",        # missing degree
        "poly:zn:2,n=x",    # bad degree
        "",                 # empty expression
    ])
    def test_bad_expressions(self, expr):
        with pytest.raises((ConstructorError, MalformedRingError)):
            build(expr)

    def test_cap_passed_through(self):
        with pytest.raises(CapExceededError):
            build("zn:10", cap=8)
        with pytest.raises(CapExceededError):
            build("poly:zn:4,n=4", cap=128)
