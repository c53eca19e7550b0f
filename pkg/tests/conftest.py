from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; call with (label, passed, detail)."""

    def record(label, passed, detail=""):
        _CRITERIA.append((label, bool(passed), detail))
        assert passed, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")
