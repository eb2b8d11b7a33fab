"""One test per acceptance criterion; each prints a PASS/FAIL line."""
import pytest

from orientals.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print("\n" + str(result))
    assert result.passed, "\n".join(map(str, result.details))
