import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])


@pytest.fixture
def record_criterion():
    def record(n: int, ok: bool, text: str):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {text}"
        ACCEPTANCE_LINES[n] = line
        print(line)
        return ok
    return record
