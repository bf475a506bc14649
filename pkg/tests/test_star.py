"""Involution validation and structural subsets, with frozen oracles."""
from __future__ import annotations

import pytest

from starclean import (
    AxiomError,
    MalformedRingError,
    identity_involution,
    idempotents,
    is_abelian_ring,
    is_absolutely_local,
    is_boolean,
    is_local,
    is_periodic,
    jacobson_radical,
    make_zn,
    nilpotents,
    periodicity_witnesses,
    projections,
    star_ring,
    structural_sets,
    units,
    validate_involution,
)
from starclean.construct import build


class TestInvolutionGate:
    def test_identity_is_valid_on_commutative(self, zn):
        t = zn(9).table
        assert validate_involution(t, identity_involution(t)) == []

    def test_coordinate_swap_is_valid_on_square_product(self, zn):
        from starclean import direct_product

        t = direct_product(zn(2), zn(2)).table
        # index of (a, b) is 2a + b; swapping coordinates is a ring
        # automorphism of order two, hence a valid involution
        perm = [0, 2, 1, 3]
        assert validate_involution(t, perm) == []
        s = star_ring(t, perm)
        assert s.star(1) == 2 and s.star(3) == 3
        assert not s.star.is_identity

    def test_non_bijective_perm_is_malformed(self, zn):
        with pytest.raises(MalformedRingError):
            validate_involution(zn(4).table, [0, 1, 1, 3])

    def test_wrong_length_perm_is_malformed(self, zn):
        with pytest.raises(MalformedRingError):
            validate_involution(zn(4).table, [0, 1])

    def test_broken_involution_is_axiom_error_not_counterexample(self, zn):
        # swapping 1 and 2 in Z_4 breaks additivity: (1+1)* = 2* = 1 != 1* + 1*
        with pytest.raises(AxiomError) as exc_info:
            star_ring(zn(4).table, [0, 2, 1, 3])
        laws = {v.law for v in exc_info.value.violations}
        assert laws <= {"star-additive", "star-antimultiplicative", "star-involutive"}
        assert laws

    def test_transpose_involution_is_anti_multiplicative(self, examples):
        s = examples["transpose-8"]
        t = s.table
        for x in range(t.order):
            for y in range(t.order):
                assert s.star(t.mul[x][y]) == t.mul[s.star(y)][s.star(x)]


class TestStructuralSets:
    def test_idempotents_z6(self, zn):
        assert idempotents(zn(6)) == frozenset({0, 1, 3, 4})

    def test_nilpotents_z8(self, zn):
        nil, index = nilpotents(zn(8))
        assert nil == frozenset({0, 2, 4, 6})
        assert index == {0: 1, 2: 3, 4: 2, 6: 3}

    def test_units_z12(self, zn):
        assert units(zn(12)) == frozenset({1, 5, 7, 11})

    def test_jacobson_radical(self, zn):
        assert jacobson_radical(zn(4)) == frozenset({0, 2})
        assert jacobson_radical(zn(6)) == frozenset({0})
        assert jacobson_radical(zn(12)) == frozenset({0, 6})

    def test_projections_can_be_smaller_than_idempotents(self, examples):
        s = examples["2.3"]
        assert idempotents(s) == frozenset({0, 1, 2, 3})
        assert projections(s) == frozenset({0, 1})

    def test_nil_and_radical_star_closed(self, examples):
        for s in examples.values():
            nil, _ = nilpotents(s)
            assert {s.star(x) for x in nil} == set(nil)
            rad = jacobson_radical(s)
            assert {s.star(x) for x in rad} == set(rad)

    def test_structural_sets_consistency(self, zn):
        sets = structural_sets(zn(8))
        assert sets.projections <= sets.idempotents
        assert sets.jacobson == sets.nilpotents == frozenset({0, 2, 4, 6})
        assert sets.units == frozenset({1, 3, 5, 7})


class TestRingPredicates:
    def test_boolean_witness(self, zn):
        ok, witness = is_boolean(zn(4))
        assert not ok and witness == 2
        assert is_boolean(zn(2))[0]

    def test_boolean_product(self, zn):
        from starclean import direct_product
        assert is_boolean(direct_product(zn(2), zn(2)))[0]

    def test_periodicity_witnesses(self, zn):
        wit = periodicity_witnesses(zn(6))
        m, n = wit[2]
        assert m < n and pow(2, m, 6) == pow(2, n, 6)
        assert is_periodic(zn(6))

    def test_local(self, zn):
        assert is_local(zn(4))
        assert is_local(zn(9))
        assert not is_local(zn(6))
        assert is_local(build("ri:zn:2,mu=1,eta=1"))  # the 4-element field

    def test_abelian(self, zn, examples):
        assert is_abelian_ring(zn(12))[0]
        ok, witness = is_abelian_ring(examples["transpose-8"])
        assert not ok
        e, x = witness
        t = examples["transpose-8"].table
        assert t.mul[e][e] == e and t.mul[e][x] != t.mul[x][e]

    def test_absolutely_local_needs_nonzero_radical(self, zn):
        # fields are excluded: their radical is {0}
        assert not is_absolutely_local(zn(2))
        assert not is_absolutely_local(zn(5))
        assert not is_absolutely_local(build("ri:zn:2,mu=1,eta=1"))

    def test_absolutely_local_oracle_values(self, zn):
        assert is_absolutely_local(zn(4))
        assert is_absolutely_local(zn(9))
        assert not is_absolutely_local(zn(8))  # (4) is strictly inside (2)
        assert not is_absolutely_local(zn(6))  # not even local
        assert not is_absolutely_local(zn(16))
        assert is_absolutely_local(zn(25))
