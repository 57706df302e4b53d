import os

import pytest
from hypothesis import HealthCheck, settings

from ttsteenrod import d_limit_ring, ext_of_elementary, make_E, make_truncation
from ttsteenrod.coaction import coaction_table

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def d3():
    return d_limit_ring(make_truncation(3, 40, 10))


@pytest.fixture(scope="session")
def d3_small():
    return d_limit_ring(make_truncation(3, 24, 4))


@pytest.fixture(scope="session")
def d4():
    return d_limit_ring(make_truncation(4, 64, 3))


@pytest.fixture(scope="session")
def e0():
    return ext_of_elementary(make_E(0), make_truncation(4, 40, 6))


@pytest.fixture(scope="session")
def table3(d3):
    return coaction_table(d3)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
