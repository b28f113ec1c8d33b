"""The acceptance battery: every criterion runs at its stated budget with
zero numerical tolerance, printing one pass/fail line per criterion."""

import pytest

from cycdaha import acceptance


@pytest.mark.parametrize(
    "criterion", acceptance.ALL_CRITERIA, ids=lambda fn: fn.criterion_name
)
def test_acceptance_criterion(criterion):
    result = criterion()
    line = f"[{result['status'].upper()}] {result['name']} ({result['seconds']}s)"
    print(line)
    failed = {
        k: v for k, v in result["details"].items() if v is not True
    }
    assert result["status"] == "pass", failed
