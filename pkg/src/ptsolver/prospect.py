"""Prospect-theory primitives: value function, probability weighting, utility."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidModel
from .market import MarketScenario, SensingDistribution, excess_over_leasing


@dataclass(frozen=True)
class RiskProfile:
    """S-shaped value function and Prelec-style weighting parameters.

    ``lam`` is the loss penalty, ``beta``/``gamma`` the curvature on gains and
    losses, ``mu`` the probability distortion.  All ones is risk neutral.
    """

    lam: float = 1.0
    beta: float = 1.0
    gamma: float = 1.0
    mu: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam >= 1.0):
            raise InvalidModel(f"lambda must be >= 1, got {self.lam}")
        for name in ("beta", "gamma", "mu"):
            value = getattr(self, name)
            if not (0.0 < value <= 1.0):
                raise InvalidModel(f"{name} must lie in (0, 1], got {value}")

    @classmethod
    def eut(cls) -> "RiskProfile":
        return cls(1.0, 1.0, 1.0, 1.0)

    @property
    def is_eut(self) -> bool:
        return self.lam == self.beta == self.gamma == self.mu == 1.0


_REFERENCE_KINDS = ("risk_free", "high", "low", "custom")


@dataclass(frozen=True)
class ReferencePoint:
    """Benchmark profit separating gains from losses.

    ``risk_free`` is the lease-everything profit D(pi - c_l), ``high`` assumes
    all demand is sensed at no loss D(pi - c_s), ``low`` is D(pi - c_l - c_s),
    and ``custom`` carries an explicit value.
    """

    kind: str = "risk_free"
    value: float | None = None

    def __post_init__(self):
        if self.kind not in _REFERENCE_KINDS:
            raise InvalidModel(f"unknown reference kind {self.kind!r}")
        if self.kind == "custom":
            if self.value is None or not math.isfinite(self.value):
                raise InvalidModel("custom reference point needs a finite value")
        elif self.value is not None:
            raise InvalidModel(f"reference kind {self.kind!r} takes no value")

    @classmethod
    def risk_free(cls):
        return cls("risk_free")

    @classmethod
    def high(cls):
        return cls("high")

    @classmethod
    def low(cls):
        return cls("low")

    @classmethod
    def custom(cls, value: float):
        return cls("custom", float(value))

    def resolve(self, scenario: MarketScenario) -> float:
        # same arithmetic as the profit each one names (lease all / sense D
        # fully realized / sense D and lease D), so those outcomes sit at exactly 0
        s = scenario
        if self.kind == "risk_free":
            return s.price * s.demand - s.demand * s.leasing_cost
        if self.kind == "high":
            return s.price * s.demand - s.demand * s.sensing_cost
        if self.kind == "low":
            return s.price * s.demand - (s.demand * s.sensing_cost + s.demand * s.leasing_cost)
        return float(self.value)


def validate_assumption1(profile: RiskProfile) -> bool:
    """True when gains are valued more concavely than losses are convex."""
    return profile.beta < profile.gamma


def value(x, profile: RiskProfile):
    """Reference-dependent valuation of a net gain ``x`` (scalar or array).

    Losses are raised to ``gamma`` through ``exp(gamma * log|x|)`` so a negative
    base is never fed to a fractional power.
    """
    x = np.asarray(x, dtype=float)
    mag = np.abs(x)
    with np.errstate(divide="ignore"):
        logmag = np.log(np.where(mag > 0, mag, 1.0))
    gain = np.exp(profile.beta * logmag)
    loss = -profile.lam * np.exp(profile.gamma * logmag)
    out = np.where(x > 0, gain, np.where(x < 0, loss, 0.0))
    return out if out.ndim else float(out)


def weight(p, profile: RiskProfile):
    """Subjective weight ``exp(-(-ln p)^mu)`` of an objective probability."""
    p = np.asarray(p, dtype=float)
    if np.any(p <= 0) or np.any(p > 1):
        raise InvalidModel("weight() needs probabilities in (0, 1]")
    out = np.exp(-np.power(-np.log(p), profile.mu))
    return out if out.ndim else float(out)


def utility_curve(b_s, scenario: MarketScenario, dist: SensingDistribution,
                  profile: RiskProfile, rp: ReferencePoint) -> np.ndarray:
    """Vectorized prospect utility over an array of sensing amounts.

    Each outcome is weighted by w(p_i) on its own; the weights are not
    renormalized, so they need not sum to one.
    """
    b = np.asarray(b_s, dtype=float)
    offset = scenario.risk_free_profit - rp.resolve(scenario)  # exactly 0 for risk_free
    total = np.zeros_like(b)
    for alpha, p in zip(dist.alphas, dist.probs):
        gain = excess_over_leasing(b, alpha, scenario) + offset
        total = total + value(gain, profile) * weight(p, profile)
    return total


def pt_utility(b_s: float, scenario: MarketScenario, dist: SensingDistribution,
               profile: RiskProfile, rp: ReferencePoint) -> float:
    if b_s < 0:
        raise InvalidModel(f"sensing amount must be >= 0, got {b_s}")
    return float(utility_curve(b_s, scenario, dist, profile, rp))


def fingerprint(scenario, dist, profile, rp) -> str:
    """Stable digest of a full problem instance; used to pair up results."""
    text = repr((scenario, dist, profile, rp))
    return hashlib.sha1(text.encode()).hexdigest()[:16]
