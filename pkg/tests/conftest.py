import pytest

from quandloid.census import census_up_to


@pytest.fixture(scope="session")
def census4():
    return census_up_to(4)


@pytest.fixture(scope="session")
def census5():
    return census_up_to(5)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_line(n))
