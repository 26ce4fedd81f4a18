import pytest
from hypothesis import HealthCheck, settings

from liechain import catalog

settings.register_profile("exact", deadline=None, max_examples=40, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")

CATALOG = ["abelian(2)", "heisenberg3", "heisenberg5", "aff1", "oscillator", "sl2", "sl3"]
SOLVABLE = ["heisenberg3", "heisenberg5", "aff1", "oscillator"]


@pytest.fixture(scope="session")
def h3():
    return catalog.get("heisenberg3")


@pytest.fixture(scope="session")
def aff1():
    return catalog.get("aff1")


@pytest.fixture(scope="session")
def sl2():
    return catalog.get("sl2")


@pytest.fixture(scope="session")
def fixture_results():
    from liechain import fixtures
    return {name: fixtures.get(name) for name in fixtures.names()}


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance")
        for line in mod.LINES:
            terminalreporter.write_line(line)
