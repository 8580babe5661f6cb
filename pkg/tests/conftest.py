import os
import sys

import pytest
from hypothesis import HealthCheck, settings

from nichols.catalog import cached

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repro"))


@pytest.fixture(scope="session")
def alg():
    """Catalog algebras built once per session: alg("4B")."""
    return cached


@pytest.fixture(scope="session")
def A3(alg):
    return alg("3A")


@pytest.fixture(scope="session")
def A4(alg):
    return alg("4A")


@pytest.fixture(scope="session")
def B4(alg):
    return alg("4B")


@pytest.fixture(params=["3A", "4A", "4B"])
def small(request, alg):
    return alg(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
