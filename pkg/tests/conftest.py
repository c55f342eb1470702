"""Shared pytest plumbing.

Collects the one-line pass/fail records emitted by the acceptance tests
and prints them in a dedicated section of the terminal summary so they
stay visible even under captured output.
"""

from __future__ import annotations

acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_lines:
        terminalreporter.write_line(line)
