#!/usr/bin/env python3

import json
import os

import pandas as pd
import pytest

from src.frobchar import verification
from src.frobchar.characters import ch_C, ch_D, IdentityFailure
from src.frobchar.verification import (
    CHECK_NAMES,
    Discrepancy,
    first_difference,
    run_check,
    sample_inner_functions,
    verify,
)
from src.storage.chartab_cache import CharacterTableCache, cache_path
from src.symfunc.character_table import clear_memory_cache, set_table_store, table_store
from src.reporting.output import render_verification, save_verification_report, verification_table


def test_first_difference_reports_lowest_q_power():
    found = first_difference(3, ch_D(3), ch_C(3), "D vs C")
    assert found == Discrepancy(3, (2, 1), 1, "0", "1", "D vs C")
    assert first_difference(3, ch_D(3), ch_D(3)) is None


@pytest.mark.parametrize("check", [
    "mpy",
    "cancellation",
    "dn-two-formulas",
    "ot-factorization",
    "t-consistency",
    "top-degree",
    "subtraction",
    "projection",
    "positivity",
    "hilbert",
])
def test_checks_pass_for_small_n(check):
    report = verify(check, 4)
    assert report.passed, render_verification(report)
    assert [outcome.n for outcome in report.details] == [1, 2, 3, 4]
    assert report.discrepancy is None


def test_genfun_is_cumulative():
    report = verify("genfun", 4)
    assert report.passed
    assert len(report.details) == 1
    assert report.n_max == 4


def test_oracle_check():
    report = verify("oracle", 5, oracle_n_max=3)
    assert report.passed, render_verification(report)
    assert [outcome.n for outcome in report.details] == [1, 2, 3]


def test_all_adds_oracle_only_on_request():
    names = {name for name, _ in verification._tasks("all", 2, False, 2)}
    assert "oracle" not in names
    assert names == set(CHECK_NAMES) - {"all", "oracle"}
    with_oracle = verification._tasks("all", 2, True, 1)
    assert ("oracle", 1) in with_oracle


def test_failures_become_report_data(monkeypatch):
    bad = Discrepancy(2, (1, 1), 0, "1", "0", "planted")
    monkeypatch.setitem(verification.CHECKS, "mpy", lambda n, order: bad if n == 2 else None)
    report = verify("mpy", 3)
    assert not report.passed
    assert report.discrepancy == bad
    assert [outcome.passed for outcome in report.details] == [True, False, True]
    assert "n=2" in render_verification(report)


def test_assertion_errors_are_caught(monkeypatch):
    def explode(n, order):
        raise IdentityFailure("two evaluations differ")

    monkeypatch.setitem(verification.CHECKS, "hilbert", explode)
    outcome = run_check("hilbert", 2, None)
    assert not outcome.passed
    assert outcome.message.startswith("IdentityFailure")


def test_parallel_run_matches_serial():
    serial = verify("hilbert", 3)
    parallel = verify("hilbert", 3, jobs=2)
    assert [(o.n, o.passed) for o in parallel.details] == [(o.n, o.passed) for o in serial.details]


def test_unknown_check():
    with pytest.raises(ValueError):
        verify("nonsense", 3)


def test_report_files(tmp_path):
    report = verify("hilbert", 2)
    json_path = save_verification_report(report, str(tmp_path))
    with open(json_path) as f:
        saved = json.load(f)
    assert saved["check"] == "hilbert"
    assert saved["passed"] is True
    csv_path = json_path[:-len(".json")] + ".csv"
    assert os.path.exists(csv_path)
    table = pd.read_csv(csv_path)
    assert list(table.columns) == ["check", "n", "result", "ms", "message"]
    assert list(verification_table(report)["result"]) == ["pass", "pass"]


def test_expensive_checks_stop_at_their_cap():
    tasks = verification._tasks("subtraction", 7, False, 1)
    assert [n for _, n in tasks] == [1, 2, 3, 4]
    tasks = verification._tasks("all", 8, False, 1)
    assert max(n for name, n in tasks if name == "projection") == 6
    assert max(n for name, n in tasks if name == "mpy") == 8


def test_report_n_max_is_largest_n_checked(monkeypatch):
    monkeypatch.setitem(verification.CHECKS, "projection", lambda n, order: None)
    report = verify("projection", 9)
    assert report.passed
    assert [outcome.n for outcome in report.details] == [1, 2, 3, 4, 5, 6]
    assert report.n_max == 6
    assert "n <= 6" in render_verification(report)


def test_inner_functions_are_seeded():
    first = sample_inner_functions(3, 10)
    again = sample_inner_functions(3, 10)
    assert len(first) == len(again) > 1
    assert all(a == b for a, b in zip(first, again))
    assert all(1 <= g.degree <= 3 and not g.is_zero() for g in first)


def test_worker_installs_the_table_store(tmp_path):
    store = CharacterTableCache(str(tmp_path))
    clear_memory_cache()
    try:
        outcome = verification._run_in_worker("mpy", 3, None, store)
        assert table_store() is store
    finally:
        set_table_store(None)
    assert outcome.passed
    assert os.path.exists(cache_path(str(tmp_path), 3))


def test_reports_in_the_same_second_do_not_collide(tmp_path):
    report = verify("hilbert", 1)
    first = save_verification_report(report, str(tmp_path))
    second = save_verification_report(report, str(tmp_path))
    assert first != second
    assert len([name for name in os.listdir(tmp_path) if name.endswith(".json")]) == 2
