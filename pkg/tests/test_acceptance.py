"""Acceptance gate: one test and one printed pass/fail line per criterion."""

import pytest

from milnorreg.verify import ITEMS

BUDGET_SECONDS = {1: 1.0}


@pytest.mark.parametrize("item", sorted(ITEMS))
def test_acceptance_item(item, capsys):
    result = ITEMS[item](seed=0)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
    if item in BUDGET_SECONDS:
        assert result.seconds < BUDGET_SECONDS[item]
