import pytest

_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number, passed, seconds, limit, detail):
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number:>3}: {status}  {seconds:7.2f}s (limit {limit:g}s)  {detail}"
        _LINES.append(line)
        return line

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
