from pathlib import Path

import pytest

FIXTURE = Path(__file__).resolve().parents[1] / "src" / "biosumm" / "data" / "fixture"

# filled by test_acceptance.py: criterion id -> (status, detail)
ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{status:<10} {key}: {detail}")
