"""The randomized theorem-checking harness: determinism and honesty.

One of the checked identities ("l3": completions commute with powers)
is genuinely false, so its report is allowed to contain failures; the
test re-validates that every reported counterexample is real.
"""

import pytest

from sgpower import associated_complete, power
from sgpower.harness import THEOREM_ORDER, run_many, run_theorem


def _snapshot(report):
    return (
        report.name,
        report.trials,
        report.passed,
        dict(report.notes),
        [(c.trial, c.description) for c in report.failures],
    )


def test_unknown_theorem_rejected():
    with pytest.raises(ValueError):
        run_theorem("t99", 5, 0)


@pytest.mark.parametrize("name", THEOREM_ORDER)
def test_reports_are_deterministic(name):
    a = run_theorem(name, 12, seed=7, max_vertices=7)
    b = run_theorem(name, 12, seed=7, max_vertices=7)
    assert _snapshot(a) == _snapshot(b)


@pytest.mark.parametrize("name", [t for t in THEOREM_ORDER if t != "l3"])
def test_true_statements_pass_their_trials(name):
    report = run_theorem(name, 25, seed=3, max_vertices=8)
    assert report.ok, report.failures[:1]
    assert report.passed == report.trials == 25


def test_false_identity_failures_are_real():
    report = run_theorem("l3", 60, seed=3, max_vertices=8)
    assert report.failures, "expected counterexamples to the completion identity"
    for case in report.failures:
        g = case.graphs["graph"]
        broken = False
        for n in range(1, 8):
            pr = power(g, n)
            if associated_complete(g, "max") != associated_complete(pr.power_max, "max"):
                broken = True
            if associated_complete(g, "min") != associated_complete(pr.power_min, "min"):
                broken = True
        assert broken, f"reported counterexample does not violate the identity: {g!r}"


def test_run_many_preserves_order_and_counts():
    reports = run_many(["nbc", "t1"], 6, seed=1, max_vertices=6)
    assert [r.name for r in reports] == ["nbc", "t1"]
    assert all(r.trials == 6 for r in reports)


def test_notes_count_skipped_trials():
    report = run_theorem("l1", 20, seed=0, max_vertices=8)
    assert report.ok
    # non-unique powers are skipped but recorded
    assert set(report.notes) <= {"skipped_non_unique"}
