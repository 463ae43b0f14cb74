"""One line per acceptance criterion: run with ``pytest -s tests/test_acceptance.py``."""

import pytest

from dirainbow.suite import CRITERIA, SuiteConfig, run_criterion


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{c.number}" for c in CRITERIA])
def test_criterion(criterion):
    result = run_criterion(criterion, SuiteConfig(seed=0))
    print(result.line())
    assert result.passed, result.detail
