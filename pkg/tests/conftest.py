"""Shared test plumbing.

The acceptance tests register one summary line per criterion; the
terminal-summary hook prints them after the run so the pass/fail ledger
is visible regardless of capture settings.
"""

from __future__ import annotations

CRITERION_LINES: list[str] = []


def record_criterion(line: str) -> None:
    CRITERION_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERION_LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in CRITERION_LINES:
        terminalreporter.write_line(line)
