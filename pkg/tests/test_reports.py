#!/usr/bin/env python3
"""
Tests for reports module

@brief Check results and deterministic report serialization
"""

import json
import math

import numpy as np
import pytest

from shearlift.reports import CheckResult, VerificationReport


class TestCheckResult:
    """Test pass/fail and serialization of single checks"""

    def test_pass_boundary(self) -> None:
        assert CheckResult("exact", 1e-4, 1e-4).passed
        assert not CheckResult("over", 2e-4, 1e-4).passed

    def test_nan_fails(self) -> None:
        result = CheckResult("nan", math.nan, 1.0)
        assert not result.passed
        assert result.to_dict()["max_residual"] == "nan"

    def test_numpy_details(self) -> None:
        details = {"count": np.int64(3), "where": complex(0.5, -0.25), "values": np.float64(1.5)}
        payload = CheckResult("numpy", 0.0, 1.0, details).to_dict()
        assert payload["details"] == {"count": 3, "where": [0.5, -0.25], "values": 1.5}
        json.dumps(payload)


class TestVerificationReport:
    """Test aggregation, lookup and JSON output"""

    def test_aggregate(self) -> None:
        report = VerificationReport("demo")
        report.add(CheckResult("a", 0.0, 1.0))
        report.add(CheckResult("b", 2.0, 1.0))
        report.warn("careful")
        assert not report.passed
        assert report.failed == ["b"]
        assert report.get("a").passed
        with pytest.raises(KeyError):
            report.get("missing")

    def test_warnings_do_not_fail(self) -> None:
        report = VerificationReport("demo", [CheckResult("a", 0.0, 1.0)])
        report.warn("note")
        assert report.passed

    def test_json_is_deterministic(self) -> None:
        report = VerificationReport("demo", [CheckResult("a", 0.1, 1.0, {"z": 1, "b": 2})])
        text = report.to_json()
        assert text == report.to_json()
        assert text.index('"b"') < text.index('"z"')
        assert json.loads(text)["checks"][0]["max_residual"] == 0.1
