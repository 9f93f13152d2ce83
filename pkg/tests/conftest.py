import pytest

from recurrent.enumerator import sweep

N_BIG = 10**6

_criteria = []


def record_criterion(number, title, passed, seconds):
    _criteria.append((number, title, passed, seconds))


@pytest.fixture
def criterion():
    return record_criterion


@pytest.fixture(scope="session")
def sweep_big():
    return sweep(1, N_BIG)


@pytest.fixture(scope="session")
def sweep_small():
    return sweep(1, 10**5)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, seconds in sorted(_criteria):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title} ({seconds:.2f} s)")
