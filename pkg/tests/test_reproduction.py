"""Tests for the acceptance runner and its report"""

import pytest

from quandle_lab.algebra.group_ring import GroupRingElement
from quandle_lab.reproduction import (
    AcceptanceRunner,
    CheckResult,
    RowStatus,
    alexander_example_expected,
    render_report,
    run_acceptance,
)


def test_alexander_expectation_depends_on_n_mod_3():
    assert alexander_example_expected(1) == GroupRingElement(
        None, ((0, 9), (1, 6), (2, 6), (3, 6))
    )
    assert alexander_example_expected(3).coefficient(0) == 27


def test_failed_computation_is_recorded():
    runner = AcceptanceRunner()

    def boom() -> str:
        raise ValueError("no")

    runner._record("knots", "exploding row", "1", boom)
    row = runner.results[0]
    assert row.status is RowStatus.FAIL
    assert row.actual == "error: no"
    assert not runner.all_passed


def test_report_lists_failures(tmp_path):
    rows = [
        CheckResult("cohomology", "H^2(R3; Z)", "0", "0", RowStatus.PASS, 0.1),
        CheckResult("knots", "Φ(3_1)", "4 + 12t", "4", RowStatus.FAIL, 0.2),
    ]
    path = tmp_path / "report.md"
    text = render_report(rows, path)
    assert path.read_text() == text
    assert "1/2 rows passed" in text
    assert "## Cohomology" in text and "## Knots" in text
    assert "| FAIL | Φ(3_1) |" in text


@pytest.mark.slow
def test_every_acceptance_row_passes():
    results = run_acceptance(workers=2)
    failed = [(r.check_name, r.expected, r.actual) for r in results if not r.passed]
    assert failed == []
    assert {r.category for r in results} == {"cohomology", "knots", "surfaces"}
