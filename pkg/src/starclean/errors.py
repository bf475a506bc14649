"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes, and the HTTP layer onto status
codes, so every failure mode below must stay distinguishable.
"""
from __future__ import annotations


class StarcleanError(Exception):
    """Base class for all package-specific failures."""


class MalformedRingError(StarcleanError):
    """Structurally bad input: wrong shapes, out-of-range indices, unparseable data.

    Distinct from AxiomError: a malformed table is not even a candidate ring.
    """


class ConstructorError(MalformedRingError):
    """A constructor expression could not be parsed or names an unknown builder."""


class AxiomError(StarcleanError):
    """Well-formed tables that violate ring or involution axioms.

    Carries the list of violations, each with a witness tuple.
    """

    def __init__(self, message: str, violations: list | None = None):
        super().__init__(message)
        self.violations = violations or []


class CapExceededError(StarcleanError):
    """An operation or construction would exceed the configured order cap."""


class PreconditionError(StarcleanError):
    """A documented precondition was violated (e.g. primary-ideal test on a
    non-commutative ring, or a ring extension over a non-commutative base)."""
