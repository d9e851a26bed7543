"""Structured check reports shared by the verification modules and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckRecord:
    name: str
    params: dict[str, Any]
    expected: str
    actual: str
    passed: bool
    skipped: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "expected": self.expected,
            "actual": self.actual,
            "status": "skip" if self.skipped else ("pass" if self.passed else "FAIL"),
        }


@dataclass
class Report:
    title: str
    checks: list[CheckRecord] = field(default_factory=list)

    def record(
        self,
        name: str,
        params: dict[str, Any],
        expected: Any,
        actual: Any,
        passed: bool | None = None,
    ) -> CheckRecord:
        if passed is None:
            passed = expected == actual
        rec = CheckRecord(name, params, str(expected), str(actual), passed)
        self.checks.append(rec)
        return rec

    def skip(self, name: str, params: dict[str, Any], reason: str) -> CheckRecord:
        rec = CheckRecord(name, params, "", reason, True, skipped=True)
        self.checks.append(rec)
        return rec

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> dict[str, int]:
        ran = [c for c in self.checks if not c.skipped]
        return {
            "total": len(self.checks),
            "passed": sum(1 for c in ran if c.passed),
            "failed": len(self.failures),
            "skipped": sum(1 for c in self.checks if c.skipped),
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "ok": self.ok,
            "summary": self.summary(),
            "checks": [c.to_dict() for c in self.checks],
        }
