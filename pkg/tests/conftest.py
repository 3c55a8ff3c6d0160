"""Shared pytest plumbing: print the acceptance summary after the run.

test_acceptance.py records one line per criterion in ACCEPTANCE_LINES;
emitting them from the terminal-summary hook keeps them visible even
though pytest captures stdout during the tests themselves.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance summary")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
