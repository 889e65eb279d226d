"""Randomized property suites and their helpers."""

import random

import pytest

from latdefect import (
    SUITE_NAMES,
    SuiteFailureError,
    SuiteReport,
    conjugate_lattice,
    defects,
    diagonal_bimodular_lattice,
    e8_lattice,
    random_unimodular,
    verify_suite,
)
from latdefect.linalg import bareiss_determinant


def test_random_unimodular_properties():
    rng = random.Random(7)
    for n in (1, 2, 4, 7):
        for _ in range(20):
            u = random_unimodular(rng, n)
            assert bareiss_determinant(u) in (1, -1)
            assert max(abs(x) for row in u for x in row) <= 3


def test_conjugation_preserves_invariants():
    rng = random.Random(11)
    lat = diagonal_bimodular_lattice(3)
    base = defects(lat, reduce=True)
    for _ in range(5):
        twisted = conjugate_lattice(lat, random_unimodular(rng, lat.rank))
        assert twisted.determinant == lat.determinant
        assert twisted.sign == lat.sign
        assert defects(twisted, reduce=True) == base


def test_conjugating_e8_keeps_unimodularity():
    twisted = conjugate_lattice(e8_lattice(), random_unimodular(random.Random(3), 8))
    assert abs(twisted.determinant) == 1


def test_each_suite_passes_smoke_run():
    for name in SUITE_NAMES:
        report = verify_suite(name, rank_bound=6, trials=10, seed=5)
        assert report == SuiteReport(name=name, trials=10, checks=report.checks, seed=5)
        assert report.checks >= 10


def test_suites_are_deterministic():
    first = verify_suite("congruence", rank_bound=5, trials=15, seed=42)
    second = verify_suite("congruence", rank_bound=5, trials=15, seed=42)
    assert first == second


def test_unknown_suite_rejected():
    with pytest.raises(ValueError, match="unknown suite"):
        verify_suite("nonsense")


def test_violations_surface_as_suite_failure(monkeypatch):
    # break the diagonality recognizer so the unimodular suite must object
    monkeypatch.setattr("latdefect.verify.is_diagonal", lambda lat: False)
    with pytest.raises(SuiteFailureError) as info:
        verify_suite("elkies", rank_bound=4, trials=5, seed=1)
    err = info.value
    assert err.exit_code == 4
    assert err.name == "elkies"
    assert len(err.violations) >= 1
    assert "elkies" in str(err)
