"""Acceptance criteria; each test prints one PASS/FAIL line (run with -s to see them)."""
import pytest

from planar_ccw import acceptance


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.line()
