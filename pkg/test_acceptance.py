#!/usr/bin/env python3

import pytest

from src.frobchar.verification import verify
from src.reporting.output import render_verification

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("check, n_max", [
    ("mpy", 12),
    ("dn-two-formulas", 15),
    ("top-degree", 15),
    ("cancellation", 10),
    ("ot-factorization", 10),
    ("t-consistency", 10),
    ("genfun", 10),
    ("positivity", 10),
    ("hilbert", 10),
    ("subtraction", 4),
    ("projection", 6),
])
def test_identity_suite_at_scale(check, n_max):
    report = verify(check, n_max)
    assert report.passed, render_verification(report)
    assert report.n_max == n_max


def test_oracle_agrees_with_formulas_up_to_five():
    report = verify("oracle", 5, oracle_n_max=5)
    assert report.passed, render_verification(report)
    assert [outcome.n for outcome in report.details] == [1, 2, 3, 4, 5]

