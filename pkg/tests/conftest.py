import pytest

_criteria_lines = []


@pytest.fixture(scope="session")
def criteria_log():
    def record(label, passed):
        _criteria_lines.append(f"{label}: {'PASS' if passed else 'FAIL'}")

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria_lines:
        return
    terminalreporter.write_sep("-", "acceptance criteria results")
    for line in _criteria_lines:
        terminalreporter.write_line(line)
