#!/usr/bin/env python3
"""
@brief Check results and verification reports
@file reports.py

A report is an ordered collection of named checks, each carrying a
residual, the tolerance it was held to and free-form details, plus
warnings that never affect the pass/fail outcome. Serialization is
deterministic: keys are sorted and floats keep their shortest round-trip
representation.

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any


def _plain(value: Any) -> Any:
    """Convert numpy scalars and containers to JSON-ready Python values"""
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [_plain(item) for item in value]
    if isinstance(value, complex):
        return [value.real, value.imag]
    if hasattr(value, "item") and callable(value.item):
        return _plain(value.item())
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


@dataclass
class CheckResult:
    """
    @brief Outcome of one verification check

    passed is True exactly when max_residual <= tolerance.
    """

    name: str
    max_residual: float
    tolerance: float
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tolerance)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "max_residual": _plain(float(self.max_residual)),
            "tolerance": _plain(float(self.tolerance)),
            "details": _plain(self.details),
        }


@dataclass
class VerificationReport:
    """
    @brief Named checks plus warnings for one subject (a shear or a surface)
    """

    subject: str
    checks: list[CheckResult] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    def get(self, name: str) -> CheckResult:
        """
        @brief Look up a check by name
        @throws KeyError when no check has that name
        """
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


__all__ = ["CheckResult", "VerificationReport"]
