"""Acceptance suite: one pass/fail line per criterion, each checked exactly.

Under pytest the lines are collected and printed in the terminal summary;
``python3 tests/test_acceptance.py`` (or ``alontarsi selfcheck``) prints
them directly.
"""

from __future__ import annotations

import sys

import pytest

from alontarsi.selfcheck import CRITERIA, run_all, run_check

RESULT_LINES: list[str] = []


@pytest.mark.parametrize("name, fn", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_criterion(name, fn):
    result = run_check(name, fn)
    RESULT_LINES.append(result.line())
    print(result.line())
    assert result.passed, result.detail


if __name__ == "__main__":
    results = run_all()
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
