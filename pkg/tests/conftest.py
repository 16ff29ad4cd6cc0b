import pytest

# criterion number -> (passed, label, detail), filled in by test_acceptance
ACCEPTANCE: dict = {}


@pytest.fixture
def record_criterion():
    def record(number: int, label: str, passed: bool, detail: str = ""):
        ACCEPTANCE[number] = (passed, label, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, label, detail = ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] criterion {number}: {label}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
