"""Economic model of the virtual operator.

Stage I picks a sensing amount ``B_s``; a random fraction ``alpha`` of it turns
out to be usable.  Stage II leases whatever demand is still uncovered.  All
functions here are plain arithmetic on immutable values and accept either
scalars or numpy arrays for ``b_s`` where that makes sense.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidModel

PROB_SUM_TOL = 1e-9


@dataclass(frozen=True)
class MarketScenario:
    """Prices and costs per Hz plus the (fixed) customer demand in Hz."""

    sensing_cost: float
    leasing_cost: float
    price: float
    demand: float

    def __post_init__(self):
        for name in ("sensing_cost", "leasing_cost", "price", "demand"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidModel(f"{name} must be finite, got {value!r}")
        if not 0 < self.sensing_cost < self.leasing_cost < self.price:
            raise InvalidModel(
                "costs must satisfy 0 < c_s < c_l < pi, got "
                f"c_s={self.sensing_cost}, c_l={self.leasing_cost}, pi={self.price}"
            )
        if self.demand <= 0:
            raise InvalidModel(f"demand must be positive, got {self.demand}")

    @property
    def cost_ratio(self) -> float:
        """Leasing-to-sensing cost ratio ``c_l / c_s``."""
        return self.leasing_cost / self.sensing_cost

    @property
    def search_upper(self) -> float:
        """Sensing beyond ``D c_l / c_s`` costs more than leasing everything."""
        return self.demand * self.leasing_cost / self.sensing_cost

    @property
    def risk_free_profit(self) -> float:
        return self.price * self.demand - self.demand * self.leasing_cost


@dataclass(frozen=True)
class SensingDistribution:
    """Discrete law of the sensing realization factor.

    ``alphas`` must be strictly increasing inside [0, 1] and every probability
    strictly positive (the weighting function is undefined at zero).
    """

    alphas: tuple[float, ...]
    probs: tuple[float, ...]

    def __post_init__(self):
        alphas = tuple(float(a) for a in self.alphas)
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "probs", probs)
        if len(alphas) == 0 or len(alphas) != len(probs):
            raise InvalidModel("distribution needs >= 1 outcome and matching probabilities")
        for a in alphas:
            if not (0.0 <= a <= 1.0):
                raise InvalidModel(f"alpha out of [0,1]: {a}")
        if any(b <= a for a, b in zip(alphas, alphas[1:])):
            raise InvalidModel("alphas must be strictly increasing")
        for p in probs:
            if not (0.0 < p <= 1.0):
                raise InvalidModel(f"probability must lie in (0,1], got {p}")
        if abs(math.fsum(probs) - 1.0) > PROB_SUM_TOL:
            raise InvalidModel(f"probabilities sum to {math.fsum(probs)!r}, not 1")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[float, float]]) -> "SensingDistribution":
        return cls(tuple(a for a, _ in pairs), tuple(p for _, p in pairs))

    @classmethod
    def binary(cls, p1: float) -> "SensingDistribution":
        """Nothing is usable with probability ``p1``, everything otherwise."""
        return cls((0.0, 1.0), (p1, 1.0 - p1))

    @property
    def size(self) -> int:
        return len(self.alphas)

    @property
    def is_binary(self) -> bool:
        return self.alphas == (0.0, 1.0)

    @property
    def mean(self) -> float:
        return math.fsum(a * p for a, p in zip(self.alphas, self.probs))

    def pairs(self) -> list[tuple[float, float]]:
        return list(zip(self.alphas, self.probs))


def profit(b_s, b_l, alpha, scenario: MarketScenario):
    """Revenue on served demand minus sensing and leasing spend."""
    s = scenario
    served = np.minimum(s.demand, b_l + b_s * alpha)
    return s.price * served - (b_s * s.sensing_cost + b_l * s.leasing_cost)


def optimal_leasing(b_s, alpha, scenario: MarketScenario):
    """Lease exactly the shortfall left after sensing, never a negative amount."""
    return np.maximum(scenario.demand - b_s * alpha, 0.0)


def profit_after_leasing(b_s, alpha, scenario: MarketScenario):
    """Profit once the Stage-II lease is chosen optimally.

    Same operation order as :func:`profit` so both routes agree bit for bit.
    """
    s = scenario
    b_l = optimal_leasing(b_s, alpha, s)
    served = np.minimum(s.demand, b_l + b_s * alpha)
    return s.price * served - (b_s * s.sensing_cost + b_l * s.leasing_cost)


def excess_over_leasing(b_s, alpha, scenario: MarketScenario):
    """Profit after optimal leasing minus the lease-everything profit.

    Equal to ``profit_after_leasing - risk_free_profit`` but written as
    c_l min(B_s alpha, D) - c_s B_s, which stays accurate for tiny B_s where
    the difference of two large profits would be pure rounding noise.
    """
    s = scenario
    return s.leasing_cost * np.minimum(b_s * alpha, s.demand) - s.sensing_cost * b_s


def tradeoff_metrics(b_s: float, scenario: MarketScenario, dist: SensingDistribution):
    """Expected, worst-realization and best-realization profit at ``b_s``.

    Worst and best use the support extremes of ``dist``; on the {0, 1} binary
    support these are the alpha = 0 and alpha = 1 profits.
    """
    profits = [float(profit_after_leasing(b_s, a, scenario)) for a in dist.alphas]
    expected = math.fsum(p * r for p, r in zip(dist.probs, profits)) / math.fsum(dist.probs)
    return expected, profits[0], profits[-1]


@dataclass(frozen=True)
class OutcomeDecision:
    alpha: float
    b_l_star: float
    profit: float


@dataclass(frozen=True)
class Provenance:
    """Which route produced a result.

    ``kind`` is ``"closed_form"`` (``label`` names the table row taken) or
    ``"oracle"`` (``grid_step`` holds the search resolution).
    """

    kind: str
    label: str = ""
    grid_step: float | None = None

    @classmethod
    def closed_form(cls, label: str) -> "Provenance":
        return cls("closed_form", label=label)

    @classmethod
    def oracle(cls, grid_step: float) -> "Provenance":
        return cls("oracle", label=f"grid_step={grid_step:.6g}", grid_step=grid_step)

    def __str__(self):
        name = "ClosedForm" if self.kind == "closed_form" else "NumericOracle"
        return f"{name}({self.label})"


@dataclass(frozen=True)
class SolveResult:
    b_s_star: float
    per_outcome: tuple[OutcomeDecision, ...]
    utility: float
    expected_profit: float
    min_possible_profit: float
    max_possible_profit: float
    provenance: Provenance
    fingerprint: str = field(default="", compare=False)

    @property
    def b_l_star(self) -> tuple[float, ...]:
        return tuple(o.b_l_star for o in self.per_outcome)


def build_result(b_s: float, scenario, dist, utility: float, provenance: Provenance,
                 fingerprint: str = "") -> SolveResult:
    """Assemble a :class:`SolveResult` from an optimal sensing amount."""
    rows = tuple(
        OutcomeDecision(
            alpha=a,
            b_l_star=float(optimal_leasing(b_s, a, scenario)),
            profit=float(profit_after_leasing(b_s, a, scenario)),
        )
        for a in dist.alphas
    )
    expected, low, high = tradeoff_metrics(b_s, scenario, dist)
    return SolveResult(
        b_s_star=float(b_s),
        per_outcome=rows,
        utility=float(utility),
        expected_profit=expected,
        min_possible_profit=low,
        max_possible_profit=high,
        provenance=provenance,
        fingerprint=fingerprint,
    )
