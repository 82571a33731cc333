"""Tests for the verification graph and its checks.

Run:
  python -m magnons.workflow.test
"""

from magnons.errors import InvalidSizeError, ResourceLimitError
from magnons.tests.utils import expect_error


def test_route_to_check() -> None:
    from .verification_graph import route_to_check

    state = {"checks_to_run": ["kostka", "tableaux_counts"], "checks_completed": []}
    assert route_to_check(state) == "tableaux_counts"
    state["checks_completed"] = ["tableaux_counts"]
    assert route_to_check(state) == "kostka"
    state["checks_completed"].append("kostka")
    assert route_to_check(state) == "end"
    print("✅ check routing OK")


def test_full_run_passes() -> None:
    from magnons.registry import CHECK_ORDER

    from .executor import run_verification

    stages = []
    report = run_verification(12, cap=14, max_workers=2, progress_callback=lambda s, m: stages.append(s))
    assert report.passed, report.format()
    assert {o["check"] for o in report.outcomes} == set(CHECK_ORDER)
    assert stages[0] == "start" and stages[-1] == "complete"
    assert [s for s in stages if s in CHECK_ORDER] == CHECK_ORDER

    density_sizes = [o["n"] for o in report.outcomes if o["check"] == "density_oracle"]
    assert density_sizes == list(range(2, 13))
    assert [o["n"] for o in report.outcomes if o["check"] == "random_robustness"] == [None]

    text = report.format()
    assert text.splitlines()[-1] == "PASS"
    assert "❌" not in text
    assert report.to_dict()["passed"] is True
    print("✅ full verification run OK")


def test_smallest_run_and_subset() -> None:
    from .executor import run_verification

    report = run_verification(2, cap=14, checks=["rs_bijection", "kostka"], progress_callback=lambda s, m: None)
    assert report.passed
    assert [o["check"] for o in report.outcomes] == ["kostka", "rs_bijection"]
    print("✅ N=2 subset run OK")


def test_limits() -> None:
    from .executor import run_verification

    expect_error(ResourceLimitError, run_verification, 15, cap=14)
    expect_error(InvalidSizeError, run_verification, 1, cap=14, progress_callback=lambda s, m: None)
    print("✅ size limits OK")


def test_rs_bijection_check() -> None:
    from .checks import RSBijectionCheck

    check = RSBijectionCheck(cap=14)
    for n in (2, 3, 5, 10, 12):
        assert check.check(n) == [], n
    print("✅ RS bijection check accepts the single-row P")


def test_failures_are_reported() -> None:
    from .checks import BaseCheck
    from .report import VerificationReport

    class BrokenCheck(BaseCheck):
        name = "kostka"

        def check(self, n):
            if n == 3:
                raise ArithmeticError("boom")
            return [] if n == 2 else [f"bad at {n}"]

    outcomes = BrokenCheck(cap=14).run({"n_max": 4, "max_workers": 2})
    assert [o["passed"] for o in outcomes] == [True, False, False]
    assert outcomes[1]["failures"] == ["ArithmeticError: boom"]

    report = VerificationReport(n_max=4, cap=14, outcomes=outcomes)
    assert not report.passed
    assert len(report.failures()) == 2
    text = report.format()
    assert "❌ Two-letter Kostka numbers (3 runs)" in text
    assert "    N=4: bad at 4" in text
    assert text.splitlines()[-1] == "FAIL"
    print("✅ failure reporting OK")


def main() -> None:
    print("\n=== Workflow Tests ===")
    test_route_to_check()
    test_full_run_passes()
    test_smallest_run_and_subset()
    test_limits()
    test_rs_bijection_check()
    test_failures_are_reported()
    print("\n✅ All workflow tests passed.")


if __name__ == "__main__":
    main()
