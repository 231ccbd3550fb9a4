"""Acceptance gate: every criterion runs at its stated (exact) tolerance.

One test per criterion; each prints its PASS/FAIL line so the gate is
readable in the pytest output (run with -s or check the captured output).
"""

import pytest

from torcob.accept import CRITERIA


@pytest.mark.parametrize("num,slug,fn", CRITERIA, ids=[f"{n:02d}-{s}" for n, s, _ in CRITERIA])
def test_criterion(num, slug, fn):
    ok, detail = fn()
    print(("PASS" if ok else "FAIL") + f" {num:2d} {slug}" + (f": {detail}" if detail else ""))
    assert ok, f"criterion {num} ({slug}): {detail}"
