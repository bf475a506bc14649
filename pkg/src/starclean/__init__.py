"""starclean: classification toolkit for finite rings with involution.

Build finite *-rings from constructor expressions or JSON table specs,
compute their structural subsets (idempotents, projections, nilpotents,
units, radical), classify them against the strongly nil *-clean family of
conditions, explore their ideal lattices, and verify the equivalences the
classifiers are built from over whole corpora of rings.
"""
from .classify import PREDICATE_NAMES, Decomposition, RingFacts, classify
from .construct import (
    EXAMPLES,
    ExtensionSpec,
    build,
    direct_product,
    extend_Ri,
    make_zn,
    poly_quotient,
)
from .core import (
    AxiomViolation,
    RingTable,
    RingValidation,
    characteristic,
    elem_add,
    elem_mul,
    elem_neg,
    elem_pow,
    elem_sub,
    ideal_closure,
    is_commutative,
    max_order,
    ring_table,
    validate_ring,
)
from .errors import (
    AxiomError,
    CapExceededError,
    ConstructorError,
    MalformedRingError,
    PreconditionError,
    StarcleanError,
)
from .ideals import (
    IdealSet,
    QuotientRing,
    all_ideals,
    annotate_flags,
    generated_ideal,
    intersect_ideals,
    is_maximal,
    is_primary,
    is_prime,
    is_radical_closed,
    is_semiprime,
    is_submaximal,
    quotient,
    sum_ideals,
)
from .ringio import (
    canonical_json,
    content_hash,
    load_ring,
    ring_from_dict,
    ring_hash,
    ring_spec_dict,
    save_ring,
)
from .star import (
    Involution,
    StarRing,
    StructuralSets,
    identity_involution,
    idempotents,
    is_abelian_ring,
    is_absolutely_local,
    is_boolean,
    is_local,
    is_periodic,
    jacobson_radical,
    nilpotents,
    periodicity_witnesses,
    projections,
    star_ring,
    structural_sets,
    units,
    validate_involution,
)
from .theorems import (
    CHECK_CATALOG,
    CHECK_IDS,
    CorpusMember,
    SuiteConfig,
    build_corpus,
    default_corpus_recipe,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "AxiomViolation",
    "CHECK_CATALOG",
    "CHECK_IDS",
    "CapExceededError",
    "ConstructorError",
    "CorpusMember",
    "Decomposition",
    "EXAMPLES",
    "ExtensionSpec",
    "IdealSet",
    "Involution",
    "MalformedRingError",
    "PREDICATE_NAMES",
    "PreconditionError",
    "QuotientRing",
    "RingFacts",
    "RingTable",
    "RingValidation",
    "StarRing",
    "StarcleanError",
    "StructuralSets",
    "SuiteConfig",
    "all_ideals",
    "annotate_flags",
    "build",
    "build_corpus",
    "canonical_json",
    "characteristic",
    "classify",
    "content_hash",
    "default_corpus_recipe",
    "direct_product",
    "elem_add",
    "elem_mul",
    "elem_neg",
    "elem_pow",
    "elem_sub",
    "extend_Ri",
    "generated_ideal",
    "ideal_closure",
    "identity_involution",
    "idempotents",
    "intersect_ideals",
    "is_abelian_ring",
    "is_absolutely_local",
    "is_boolean",
    "is_commutative",
    "is_local",
    "is_maximal",
    "is_periodic",
    "is_primary",
    "is_prime",
    "is_radical_closed",
    "is_semiprime",
    "is_submaximal",
    "jacobson_radical",
    "load_ring",
    "make_zn",
    "max_order",
    "nilpotents",
    "periodicity_witnesses",
    "poly_quotient",
    "projections",
    "quotient",
    "ring_from_dict",
    "ring_hash",
    "ring_spec_dict",
    "ring_table",
    "run_suite",
    "save_ring",
    "star_ring",
    "structural_sets",
    "sum_ideals",
    "units",
    "validate_involution",
    "validate_ring",
]
