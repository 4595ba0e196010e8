import pytest

from mfq.catalog import load_catalog
from mfq.classical import standard_generators
from mfq.groups import enumerate_group

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def psl27():
    return enumerate_group(standard_generators("psl(2,7)"))


@pytest.fixture(scope="session")
def small_groups():
    """A handful of enumerated groups reused across property tests."""
    specs = ["psl(2,7)", "a(5)", "a(6)", "s(5)", "sl(2,3)", "q8", "z(12)", "psu(3,3)", "psp(4,2)", "psl(3,3)"]
    return {s: enumerate_group(standard_generators(s)) for s in specs}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
