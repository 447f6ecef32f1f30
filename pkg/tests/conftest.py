import pytest

from nilgeo import catalog

from helpers import ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def nj():
    return catalog.paper_nj()


@pytest.fixture(scope="session")
def njp():
    return catalog.paper_njprime()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
