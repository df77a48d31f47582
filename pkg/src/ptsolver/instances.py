"""Seeded random problem instances for property and acceptance checks."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

import numpy as np

from .errors import PivotOutOfRange
from .market import MarketScenario, SensingDistribution
from .prospect import RiskProfile

log = logging.getLogger(__name__)

SEED_ENV = "PTSOLVER_SEED"
DEFAULT_SEED = 20161016


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    seed = int(os.environ.get(SEED_ENV, default))
    log.info("instance generator seed %d (set %s to override)", seed, SEED_ENV)
    return seed


@dataclass(frozen=True)
class Instance:
    scenario: MarketScenario
    dist: SensingDistribution
    profile: RiskProfile


def random_scenario(rng: np.random.Generator) -> MarketScenario:
    price = rng.uniform(6.0, 10.0)
    leasing = rng.uniform(0.3, 0.9) * price
    sensing = rng.uniform(0.15, 0.85) * leasing
    demand = rng.uniform(5.0, 20.0)
    return MarketScenario(sensing, leasing, price, demand)


def random_distribution(rng: np.random.Generator, n: int) -> SensingDistribution:
    """Strictly increasing alphas in (0, 1); Dirichlet probabilities kept off zero."""
    while True:
        alphas = np.sort(rng.uniform(0.0, 1.0, n))
        if n == 1 or np.min(np.diff(alphas)) > 1e-3:
            break
    probs = rng.dirichlet(np.full(n, 2.0))
    probs = 0.02 / n + (1 - 0.02) * probs
    probs = probs / probs.sum()
    return SensingDistribution(tuple(alphas), tuple(probs))


def random_profile(rng: np.random.Generator, assumption1: bool = True) -> RiskProfile:
    beta = rng.uniform(0.3, 0.95)
    gamma = rng.uniform(beta + 0.02, 1.0) if assumption1 else rng.uniform(0.3, 1.0)
    return RiskProfile(lam=rng.uniform(1.0, 3.0), beta=beta, gamma=gamma, mu=rng.uniform(0.4, 1.0))


def random_instance(rng: np.random.Generator, n_outcomes: tuple[int, int] = (2, 8),
                    require_pivot: bool = True, assumption1: bool = True) -> Instance:
    """Draw one instance, rejecting draws without a pivot index when asked."""
    from .closed_form import find_pivot_index

    while True:
        n = int(rng.integers(n_outcomes[0], n_outcomes[1] + 1))
        scenario = random_scenario(rng)
        dist = random_distribution(rng, n)
        if require_pivot:
            try:
                find_pivot_index(dist, scenario)
            except PivotOutOfRange:
                continue
        return Instance(scenario, dist, random_profile(rng, assumption1))


def random_instances(seed: int, count: int, **kwargs) -> list[Instance]:
    rng = np.random.default_rng(seed)
    return [random_instance(rng, **kwargs) for _ in range(count)]
