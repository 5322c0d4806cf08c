import pytest
from hypothesis import settings

from dtcurves.pl_cones import enumerate_cones
from dtcurves.skein_graded import ProductContext
from dtcurves.surface_datum import generate_standard_datum

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def chain2():
    return generate_standard_datum(2, "chain")


@pytest.fixture(scope="session")
def handles2():
    return generate_standard_datum(2, "handles")


@pytest.fixture(scope="session")
def chain_cones(chain2):
    return enumerate_cones(chain2)


@pytest.fixture(scope="session")
def handles_cones(handles2):
    return enumerate_cones(handles2)


@pytest.fixture(scope="session")
def chain_ctx(chain2, chain_cones):
    return ProductContext(chain2, chain_cones)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
