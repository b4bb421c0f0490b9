import pytest

from sixregular.suites import TableSet


@pytest.fixture(scope="session")
def tables2000():
    return TableSet(2000)


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance  # noqa: F401

    lines = test_acceptance.RESULTS
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
