from __future__ import annotations

from acceptance_log import RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(RESULTS, key=_criterion_key):
        terminalreporter.write_line(line)


def _criterion_key(line: str):
    number = line.split("criterion ", 1)[1].split(":", 1)[0]
    head = number.split()[0]
    return (int(head) if head.isdigit() else 99, number)
