"""Collects one line per acceptance criterion; conftest prints them at the end of the run."""
from __future__ import annotations

RESULTS: list[str] = []


def record(criterion: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    RESULTS.append(line)
    print(line)
