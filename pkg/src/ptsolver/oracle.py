"""Brute-force maximizer of the prospect utility over the sensing amount.

Evaluates the utility on a dense uniform grid plus every kink D/alpha_i, then
polishes the best point with a ternary search confined to its neighbouring
cells.  Nothing here relies on the analytic solution, which is what makes it a
usable check on it; the optional ``candidates`` only add evaluation points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AssumptionViolated, InputMismatch
from .market import MarketScenario, Provenance, SensingDistribution, SolveResult, build_result
from .prospect import ReferencePoint, RiskProfile, fingerprint, utility_curve

DEFAULT_STEP_FRACTION = 1e-4
DEFAULT_REFINE_ITERS = 60
# utilities within TIE_RTOL * max|U| of the maximum count as tied with it;
# that absorbs summation-order rounding on flat stretches
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class OracleConfig:
    """Search resolution; ``None`` fields default relative to the scenario.

    ``grid_step`` defaults to D * 1e-4 and ``search_upper`` to D c_l / c_s.
    ``use_candidates`` additionally evaluates the closed-form optimum when one
    applies.  It is off by default so that the oracle stays a check on the
    analytic route rather than a copy of it.
    """

    grid_step: float | None = None
    refine_iters: int = DEFAULT_REFINE_ITERS
    search_upper: float | None = None
    use_candidates: bool = False

    def __post_init__(self):
        if self.grid_step is not None and not self.grid_step > 0:
            raise ValueError("grid_step must be positive")
        if self.search_upper is not None and not self.search_upper > 0:
            raise ValueError("search_upper must be positive")
        if self.refine_iters < 0:
            raise ValueError("refine_iters must be >= 0")

    def resolved(self, scenario: MarketScenario) -> tuple[float, float]:
        step = self.grid_step if self.grid_step is not None else DEFAULT_STEP_FRACTION * scenario.demand
        upper = self.search_upper if self.search_upper is not None else scenario.search_upper
        return step, upper


def _closed_form_candidates(scenario, dist, profile, rp):
    from .closed_form import solve_closed_form

    try:
        return [solve_closed_form(scenario, dist, profile, rp).b_s_star]
    except (AssumptionViolated, ValueError):
        return []


def _ternary(f, lo, hi, iters):
    for _ in range(iters):
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if f(m1) < f(m2):
            lo = m1
        else:
            hi = m2
    return 0.5 * (lo + hi)


def search_points(scenario: MarketScenario, dist: SensingDistribution, step: float, upper: float,
                  extra=()) -> np.ndarray:
    """Sorted, de-duplicated evaluation set: uniform grid, kinks, extras."""
    n = max(1, math.ceil(upper / step - 1e-9))
    grid = np.linspace(0.0, upper, n + 1)
    kinks = [scenario.demand / a for a in dist.alphas if a > 0 and scenario.demand / a <= upper]
    extra = [x for x in extra if 0 <= x <= upper]
    return np.unique(np.concatenate([grid, np.asarray(kinks, dtype=float), np.asarray(extra, dtype=float)]))


def maximize_utility(scenario: MarketScenario, dist: SensingDistribution, profile: RiskProfile,
                     rp: ReferencePoint, config: OracleConfig | None = None) -> SolveResult:
    """Global argmax of the utility over [0, search_upper].

    Ties, up to a relative ``TIE_RTOL``, go to the smallest sensing amount, so
    the answer never depends on evaluation order or rounding noise.
    """
    config = config or OracleConfig()
    step, upper = config.resolved(scenario)
    extra = _closed_form_candidates(scenario, dist, profile, rp) if config.use_candidates else []
    xs = search_points(scenario, dist, step, upper, extra)
    us = utility_curve(xs, scenario, dist, profile, rp)
    top = float(np.max(us))
    tie = TIE_RTOL * float(np.max(np.abs(us)))  # rounding scale of this curve
    k = int(np.argmax(us >= top - tie))  # smallest B_s among ties
    best_x, best_u = float(xs[k]), float(us[k])

    if config.refine_iters and len(xs) > 1:
        lo = float(xs[max(k - 1, 0)])
        hi = float(xs[min(k + 1, len(xs) - 1)])
        f = lambda x: float(utility_curve(x, scenario, dist, profile, rp))
        x_ref = _ternary(f, lo, hi, config.refine_iters)
        u_ref = f(x_ref)
        if u_ref > best_u + tie:
            best_x, best_u = x_ref, u_ref

    return build_result(
        best_x, scenario, dist, best_u,
        provenance=Provenance.oracle(step),
        fingerprint=fingerprint(scenario, dist, profile, rp),
    )


@dataclass(frozen=True)
class VerificationReport:
    delta_bs: float
    delta_u: float
    tol_bs: float
    tol_u: float
    passed: bool
    closed_provenance: str
    oracle_provenance: str

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict}: |dB_s|={self.delta_bs:.3e} (tol {self.tol_bs:.3e}), "
                f"dU={self.delta_u:.3e} (rel tol {self.tol_u:.1e}); "
                f"{self.closed_provenance} vs {self.oracle_provenance}")


def verify(closed: SolveResult, oracle: SolveResult, tol_bs: float, tol_u: float = 1e-8) -> VerificationReport:
    """Compare a closed-form result with the oracle's.

    Passes when the sensing amounts are within ``tol_bs`` and the closed form
    gives up at most ``tol_u * (1 + |U_oracle|)`` of utility.
    """
    if closed.fingerprint != oracle.fingerprint:
        raise InputMismatch("results come from different problem instances")
    delta_bs = abs(closed.b_s_star - oracle.b_s_star)
    delta_u = oracle.utility - closed.utility
    passed = delta_bs <= tol_bs and delta_u <= tol_u * (1.0 + abs(oracle.utility))
    return VerificationReport(delta_bs, delta_u, tol_bs, tol_u, passed,
                              str(closed.provenance), str(oracle.provenance))
