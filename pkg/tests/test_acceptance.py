"""Acceptance criteria, one test per criterion.

Each test runs the corresponding suite criterion (seeded, wall-clock limited)
and records its `[PASS|FAIL] name: detail (elapsed, limit)` line; the lines
are printed together in the terminal summary. Time limits are part of the
criteria: a slow pass is a failure.
"""

import pytest

from jordanmaps.suite import run_one

CRITERIA = [
    "rational_walkthrough_certificate",
    "exhaustive_small_field_replay",
    "ladder_identity_all_characteristics",
    "conjugation_roundtrip_batch",
    "constant_and_zero_classification",
    "preservation_suite_and_mutations",
    "char2_diamond_bundles",
    "triangular_diagonal_bundle",
    "rectangular_constancy",
    "frobenius_recovery",
]


@pytest.mark.parametrize("name", CRITERIA)
def test_criterion(name, acceptance_lines):
    result = run_one(name, seed=0)
    acceptance_lines.append(result.line())
    assert result.passed, result.line()
