"""Acceptance suite: runs every numbered criterion at its stated tolerance
and asserts each clause, printing one summary line per criterion.

Three clauses document known discrepancies between the quoted target values
and the simulated physics (depolarizing single-qubit death points, the
dephasing witness-crossing bound, and the amplitude-damping clauses noted in
the validation module); they are asserted as stated and fail with their
measured values rather than being loosened.
"""

import pytest

from noisy_cluster import validation


def _run(number):
    results = validation.CRITERIA[number]()
    hard = [r for r in results if not r.informational]
    status = "PASS" if all(r.passed for r in hard) else "FAIL"
    print(f"\ncriterion {number}: {status}")
    for row in results:
        tag = "info" if row.informational else ("pass" if row.passed else "FAIL")
        print(f"  [{tag}] {row.clause}: {row.detail}")
    return results


def _assert_all(results):
    failures = [r for r in results if not r.informational and not r.passed]
    assert not failures, "; ".join(f"{r.clause}: {r.detail}" for r in failures)


def test_criterion_1_ideal_limit():
    _assert_all(_run(1))


def test_criterion_2_closed_form_oracle():
    _assert_all(_run(2))


def test_criterion_3_esd_thresholds():
    _assert_all(_run(3))


def test_criterion_4_closed_form_fidelities():
    _assert_all(_run(4))


def test_criterion_5_witness_crossings():
    _assert_all(_run(5))


def test_criterion_6_choi_kraus_suite():
    _assert_all(_run(6))


def test_criterion_7_first_kraus_metrics():
    _assert_all(_run(7))


def test_criterion_8_structural_invariants():
    _assert_all(_run(8))


def test_witness_crossing_table_reported():
    rows = validation.witness_crossing_table()
    assert len(rows) == 3
    for row in rows:
        print(f"\n[info] {row.clause}: {row.detail}")


def test_report_renders():
    # cheap structural check of the report machinery on a synthetic result set
    results = [
        validation.CheckResult(1, "a", True, "ok"),
        validation.CheckResult(2, "b", False, "bad"),
        validation.CheckResult(2, "c", True, "note", informational=True),
    ]
    text, code = validation.render_report(results)
    assert "criterion 1: PASS" in text and "criterion 2: FAIL" in text
    assert code == 1
