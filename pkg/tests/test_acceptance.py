"""Acceptance suite: one test per criterion, each printing a single
``criterion N: PASS|FAIL ...`` line.  Run with ``pytest -s`` to see them."""

import json

import pytest

from lfact import verify as V


@pytest.mark.parametrize("k", sorted(V.CRITERIA))
def test_criterion(k):
    r = V.CRITERIA[k]()
    line = f"criterion {k}: {'PASS' if r.passed else 'FAIL'} {r.name.split(' ', 1)[-1]} {r.detail}".rstrip()
    if not r.passed:
        line += " witnesses=" + json.dumps(r.witnesses[:5], ensure_ascii=False, default=str)
    print(line)
    assert r.passed, line
