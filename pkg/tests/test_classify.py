"""Classifier predicates, witnesses, and counterexamples on frozen oracles."""
from __future__ import annotations

from starclean import PREDICATE_NAMES, RingFacts, classify, content_hash, make_zn


class TestCleanDecompositions:
    def test_z4_strongly_nil_star_clean_parts(self, zn):
        facts = RingFacts(zn(4))
        ok, decomp, _ = facts.strongly_nil_star_clean
        assert ok
        assert decomp.parts == {0: (0, 0), 1: (1, 0), 2: (0, 2), 3: (1, 2)}
        assert decomp.unique

    def test_z4_family_memberships(self, zn):
        facts = RingFacts(zn(4))
        expected_true = {
            "commutative", "abelian", "local", "absolutely_local", "periodic",
            "idempotents_are_projections", "nil_set_is_ideal",
            "nilpotent_products_vanish", "jacobson_is_nil",
            "strongly_nil_star_clean", "uniquely_strongly_nil_star_clean",
            "uniquely_nil_clean", "strongly_nil_clean", "strongly_star_clean",
            "strongly_J_star_clean", "star_boolean_like",
        }
        for name in PREDICATE_NAMES:
            assert facts.predicate(name) == (name in expected_true), name

    def test_z3_fails_with_counterexample_element(self, zn):
        facts = RingFacts(zn(3))
        ok, _, ce = facts.strongly_nil_star_clean
        assert not ok
        assert ce["element"] == 2
        assert ce["reason"] == "no splitting"

    def test_z6_not_strongly_nil_clean(self, zn):
        facts = RingFacts(zn(6))
        ok, _, ce = facts.strongly_nil_clean
        assert not ok and ce["element"] == 2

    def test_z2_is_everything_boolean(self, zn):
        facts = RingFacts(zn(2))
        for name in ("boolean", "star_boolean", "boolean_like", "star_boolean_like",
                     "strongly_nil_star_clean", "abelian", "local"):
            assert facts.predicate(name), name
        assert not facts.predicate("absolutely_local")

    def test_uniqueness_flag_separates_variants(self, examples):
        # the Boolean example: idempotent decompositions exist for every
        # element (w = 0 forced), and they are unique
        facts = RingFacts(examples["2.3"])
        assert facts.predicate("uniquely_nil_clean")
        # but projections are a strict subset of idempotents, so the
        # *-clean variants fail
        assert not facts.predicate("strongly_nil_star_clean")
        assert not facts.predicate("strongly_star_clean")


class TestExampleOracles:
    def test_example_2_3(self, examples):
        facts = RingFacts(examples["2.3"])
        assert facts.boolean[0]
        assert not facts.star_boolean[0]
        assert facts.idempotent_set == frozenset({0, 1, 2, 3})
        assert facts.projection_set == frozenset({0, 1})
        assert facts.predicate("boolean_like")
        assert not facts.predicate("star_boolean_like")

    def test_boolean_like_8(self, examples):
        facts = RingFacts(examples["boolean-like-8"])
        assert not facts.boolean[0]
        assert facts.predicate("boolean_like")
        assert facts.predicate("star_boolean_like")
        assert facts.predicate("strongly_nil_star_clean")
        assert not facts.star_boolean[0]
        assert facts.characteristic == 2
        assert len(facts.nilpotent_set) == 4

    def test_transpose_8(self, examples):
        facts = RingFacts(examples["transpose-8"])
        assert not facts.commutative[0]
        assert not facts.predicate("abelian")
        assert not facts.predicate("uniquely_nil_clean")
        assert not facts.predicate("strongly_nil_star_clean")
        assert not facts.predicate("strongly_J_star_clean")
        assert facts.projection_set == frozenset({0, 1})
        assert len(facts.idempotent_set) == 6
        assert len(facts.nilpotent_set) == 2

    def test_triangular_z4(self, examples):
        facts = RingFacts(examples["triangular-z4"])
        assert not facts.commutative[0]
        assert facts.projection_set == frozenset({0, 9})
        assert not facts.predicate("strongly_J_star_clean")
        assert not facts.predicate("strongly_nil_star_clean")
        assert len(facts.jacobson_set) == 8

    def test_triangular_z4_counterexample_is_off_diagonal_idempotent(self, examples):
        facts = RingFacts(examples["triangular-z4"])
        ok, _, ce = facts.strongly_J_star_clean
        assert not ok
        # the first failing element is the idempotent with 1 in the lower
        # diagonal slot only: triple (0,0,1), index 1
        assert ce["element"] == 1


class TestStructurePredicates:
    def test_jacobson_is_nil_on_products(self, zn):
        from starclean import direct_product
        facts = RingFacts(direct_product(zn(4), zn(9)))
        ok, _ = facts.jacobson_is_nil
        assert ok

    def test_strongly_J_star_clean_with_zero_radical(self, zn):
        from starclean import direct_product
        # J = 0 forces e = x, so the ring is strongly J-*-clean iff every
        # element is a projection
        facts = RingFacts(direct_product(zn(2), zn(2)))
        assert facts.predicate("strongly_J_star_clean")
        facts = RingFacts(zn(6))
        assert not facts.predicate("strongly_J_star_clean")

    def test_nil_set_is_ideal_oracles(self, zn):
        assert RingFacts(zn(8)).nil_set_is_ideal[0]
        assert RingFacts(zn(12)).nil_set_is_ideal[0]

    def test_periodicity_witness_map_is_total(self, zn):
        facts = RingFacts(zn(6))
        assert facts.predicate("periodic")
        assert set(facts.periodicity) == set(range(6))


class TestClassifyReport:
    def test_report_shape(self, zn):
        report = classify(zn(4))
        assert set(report) == {"ring", "predicates", "witnesses",
                               "counterexamples", "structure"}
        assert set(report["predicates"]) == set(PREDICATE_NAMES)
        assert report["ring"]["order"] == 4
        assert len(report["ring"]["hash"]) == 64
        structure = report["structure"]
        assert structure["idempotents"] == [0, 1]
        assert structure["projections"] == [0, 1]
        assert structure["nilpotents"] == [0, 2]
        assert structure["units"] == [1, 3]
        assert structure["jacobson"] == [0, 2]
        assert structure["characteristic"] == 4

    def test_report_is_deterministic(self, zn):
        a = classify(zn(4))
        b = classify(make_zn(4))
        assert a == b
        assert content_hash(a) == content_hash(b)

    def test_witnesses_carry_labels(self, zn):
        report = classify(zn(4))
        witness = report["witnesses"]["strongly_nil_star_clean"]
        assert witness["kind"] == "nil-star"
        assert witness["unique"]

    def test_counterexamples_present_when_false(self, zn):
        report = classify(zn(3))
        assert "strongly_nil_star_clean" in report["counterexamples"]
        assert report["predicates"]["strongly_nil_star_clean"] is False
