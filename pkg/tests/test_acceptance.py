"""One test per acceptance criterion; each prints its PASS/FAIL line."""

from __future__ import annotations

import pytest

from hilbquad import verify


@pytest.mark.parametrize("number", sorted(verify.CHECKS))
def test_criterion(number, capsys):
    result = verify.CHECKS[number](verify.DEFAULT_IDEALS, 0)
    with capsys.disabled():
        print("\n" + result.line())
        for d in result.details:
            print("    " + d)
    assert result.passed, result.line()
