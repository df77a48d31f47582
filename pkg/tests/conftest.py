import numpy as np
import pytest

from ptsolver.instances import seed_from_env
from ptsolver.market import MarketScenario, SensingDistribution
from ptsolver.prospect import ReferencePoint, RiskProfile


@pytest.fixture(scope="session")
def seed():
    return seed_from_env()


@pytest.fixture
def rng(seed):
    return np.random.default_rng(seed)


@pytest.fixture
def fig3_market():
    return MarketScenario(sensing_cost=2.0, leasing_cost=5.0, price=8.0, demand=10.0)


@pytest.fixture
def two_point():
    return SensingDistribution((0.2, 0.8), (0.5, 0.5))


@pytest.fixture
def risk_free():
    return ReferencePoint.risk_free()


@pytest.fixture
def eut():
    return RiskProfile.eut()


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance verdicts, one line per criterion."""
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
