"""Deterministic check reports shared by the command-line front end.

A report is a list of named checks with pass/fail verdicts and
JSON-ready detail payloads.  Serialization sorts keys and never embeds
timing or environment data, so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA = "doublesix-report/1"


@dataclass(frozen=True)
class CheckResult:
    """One named verdict with supporting data."""

    check_id: str
    description: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "id": self.check_id,
            "description": self.description,
            "status": "pass" if self.passed else "fail",
            "details": self.details,
        }


@dataclass(frozen=True)
class Report:
    """Verdicts of one command run, with the inputs that produced them."""

    command: str
    inputs: dict
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "checks": [c.to_json() for c in self.checks],
            "summary": {
                "total": len(self.checks),
                "passed": sum(1 for c in self.checks if c.passed),
                "failed": sum(1 for c in self.checks if not c.passed),
                "status": "pass" if self.passed else "fail",
            },
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    def render_text(self) -> str:
        lines = [f"[{self.command}]"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  {mark}  {c.check_id}: {c.description}")
        status = "pass" if self.passed else "fail"
        lines.append(
            f"  {len(self.checks)} checks, "
            f"{sum(1 for c in self.checks if not c.passed)} failed -> {status}"
        )
        return "\n".join(lines) + "\n"
