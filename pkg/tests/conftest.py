"""Shared fixtures.

The full-corpus suite run is expensive (~20s), so it happens once per
session; the acceptance tests time it and the unit tests reuse the report.
"""
from __future__ import annotations

import time

import pytest

from starclean import build, make_zn
from starclean.theorems import SuiteConfig, build_corpus, run_suite


@pytest.fixture(scope="session")
def zn():
    cache = {}

    def factory(n: int):
        if n not in cache:
            cache[n] = make_zn(n)
        return cache[n]

    return factory


@pytest.fixture(scope="session")
def examples():
    return {name: build(f"example:{name}")
            for name in ("2.3", "boolean-like-8", "transpose-8", "triangular-z4")}


@pytest.fixture(scope="session")
def default_corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def suite_result(default_corpus):
    """(report, elapsed_seconds) for the full default suite."""
    start = time.perf_counter()
    report = run_suite(default_corpus, SuiteConfig())
    elapsed = time.perf_counter() - start
    return report, elapsed
