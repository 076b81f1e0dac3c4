"""Test-session hooks: print the acceptance-criterion summary lines."""

import util


def pytest_terminal_summary(terminalreporter):
    if util.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in util.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
