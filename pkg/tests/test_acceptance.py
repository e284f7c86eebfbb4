"""One test per acceptance criterion; each prints its pass/fail line."""

from __future__ import annotations

import pytest

from homlab.checks import CRITERIA, FixtureSource, run_one

_FIXTURES = FixtureSource()


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"{c.number:02d}-{c.key}")
def test_criterion(criterion, capsys):
    r = run_one(criterion, _FIXTURES)
    with capsys.disabled():
        print("\n" + r.line())
    assert r.ok, r.detail
