"""Shared pytest plumbing.

test_acceptance.py records one line per acceptance criterion here; the
terminal-summary hook prints them after the run regardless of capture
settings, so the pass/fail table survives a plain `pytest -v`.
"""

_CRITERIA: list[str] = []


def record_criterion(name: str, passed: bool) -> None:
    mark = "PASS" if passed else "FAIL"
    _CRITERIA.append(f"{mark}  {name}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for line in _CRITERIA:
        terminalreporter.write_line(line)
