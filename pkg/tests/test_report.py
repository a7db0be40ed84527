import json
import math

from pytest import mark

from hblab.extremal import SupEstimate
from hblab.report import SCHEMA_VERSION, Check, CheckStatus, VerificationReport


@mark.parametrize(
    "lhs, rhs, tol, status",
    [
        (1.0, 2.0, 0.0, CheckStatus.PASS),
        (2.0, 2.0, 0.0, CheckStatus.PASS),
        (2.0 + 1e-10, 2.0, 1e-9, CheckStatus.PASS),
        (3.0, 2.0, 1e-9, CheckStatus.FAIL),
    ],
)
def test_inequality(lhs, rhs, tol, status):
    check = Check.inequality("x", lhs, rhs, tol)
    assert check.status is status
    assert check.margin == rhs - lhs


def test_equality():
    assert Check.equality("x", 0.251, 0.25, 5e-3).status is CheckStatus.PASS
    assert Check.equality("x", 0.26, 0.25, 5e-3).status is CheckStatus.FAIL


def test_estimate():
    finite = SupEstimate(1.0, 0.5j, False, None, ((0.5, 1.0),))
    diverged = SupEstimate(1e6, 0.999, True, 0.5, ((0.5, 1.0),))
    assert Check.estimate("beta", finite).status is CheckStatus.PASS
    skipped = Check.estimate("beta", diverged)
    assert skipped.status is CheckStatus.SKIP
    assert "0.5000" in skipped.detail


def test_with_target():
    check = Check.flag("x", True)
    assert check.with_target("koebe").target == "koebe"
    assert check.with_target("koebe").with_target("other").target == "koebe"


def test_as_dict_is_json_safe():
    check = Check.inequality("x", math.inf, 1.0, worst=0.5 + 0.25j)
    row = check.as_dict()
    assert row["lhs"] is None
    assert row["margin"] is None
    assert row["worst"] == [0.5, 0.25]
    assert row["status"] == "fail"
    json.dumps(row)


def test_report_summary():
    checks = [Check.flag("a", True), Check.flag("b", False), Check.skip("c", "why")]
    report = VerificationReport("growth", "identity", checks, {"tol": 1e-9}, 12)
    assert not report.passed
    assert [c.id for c in report.failed] == ["b"]
    doc = report.as_dict()
    assert doc["schema"] == SCHEMA_VERSION
    assert doc["summary"] == {"pass": 1, "fail": 1, "skip": 1}
    assert doc["config"] == {"tol": 1e-9}
