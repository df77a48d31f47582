"""Analytic optimal sensing decisions.

Covers the general prospect-theory solution under the risk-free reference
point (pivot index, decision indicators, the per-cell first-order function
``g_j`` and its root), the risk-neutral (EUT) solution, and the two solvers
for the binary {0, 1} outcome model.

Indicator and cell indices ``j`` are 1-based throughout, matching the usual
way the outcomes alpha_1 < ... < alpha_I are written.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from .errors import AssumptionViolated, DegenerateThreshold, InvalidModel, NoSignChange, PivotOutOfRange
from .market import MarketScenario, Provenance, SensingDistribution, SolveResult, build_result
from .prospect import (
    ReferencePoint,
    RiskProfile,
    fingerprint,
    pt_utility,
    validate_assumption1,
    weight,
)

DEFAULT_REL_TOL = 1e-9


@dataclass(frozen=True)
class DecisionIndicators:
    """Pivot index plus the demand thresholds M_j (j = pivot+1..I) and H_j (j = pivot+1..I-1).

    ``clamped`` lists ("M", j) / ("H", j) entries whose bracket was negative
    and were therefore set to 0.
    """

    pivot_index: int
    m: dict[int, float]
    h: dict[int, float]
    clamped: frozenset = field(default_factory=frozenset)


def find_pivot_index(dist: SensingDistribution, scenario: MarketScenario) -> int:
    """1-based index of the last realization for which sensing loses money per Hz."""
    cs, cl = scenario.sensing_cost, scenario.leasing_cost
    alphas = dist.alphas
    # compare c_l*alpha with c_s rather than alpha with c_s/c_l, so that every
    # outcome past the pivot has a strictly positive per-Hz gain in floats too
    if cl * alphas[0] >= cs or cl * alphas[-1] <= cs:
        raise PivotOutOfRange(
            f"need alpha_1 < c_s/c_l = {cs / cl:.6g} < alpha_I; "
            f"got alpha_1={alphas[0]:.6g}, alpha_I={alphas[-1]:.6g}"
        )
    return sum(1 for a in alphas if cl * a <= cs)


class _Terms:
    """Partial sums shared by the indicators and by g_j for one instance."""

    def __init__(self, dist, scenario, profile):
        if not validate_assumption1(profile):
            raise AssumptionViolated(
                f"closed form requires beta < gamma (got beta={profile.beta}, gamma={profile.gamma})"
            )
        self.s = scenario
        self.pr = profile
        self.alpha = np.asarray(dist.alphas)
        self.w = np.asarray(weight(np.asarray(dist.probs), profile), dtype=float)
        self.pivot = find_pivot_index(dist, scenario)
        self.size = dist.size
        cs, cl = scenario.sensing_cost, scenario.leasing_cost
        k = self.pivot
        # lam * sum_{i<=pivot} w_i (c_s - c_l alpha_i)^gamma
        self.loss = profile.lam * float(np.sum(self.w[:k] * (cs - cl * self.alpha[:k]) ** profile.gamma))

    def a(self, i):
        return float(self.alpha[i - 1])

    def gain_sum(self, j):
        """sum_{i=pivot+1}^{j} w_i (c_l alpha_i - c_s)^beta."""
        s, k = self.s, self.pivot
        per_hz = s.leasing_cost * self.alpha[k:j] - s.sensing_cost
        return float(np.sum(self.w[k:j] * per_hz ** self.pr.beta))

    def tail_weight(self, j):
        return float(np.sum(self.w[j:]))

    def indicator(self, j, alpha_ref):
        """[(beta*A_j - beta*c_s*(c_l*alpha_ref - c_s)^(beta-1)*W_j) /
        (gamma*loss*(1/alpha_ref)^(gamma-beta))]^(1/(gamma-beta)); None if the bracket is < 0."""
        b, g = self.pr.beta, self.pr.gamma
        cs, cl = self.s.sensing_cost, self.s.leasing_cost
        num = b * self.gain_sum(j)
        tail = self.tail_weight(j)
        if tail > 0:
            num -= b * cs * (cl * alpha_ref - cs) ** (b - 1) * tail
        den = g * self.loss * (1.0 / alpha_ref) ** (g - b)
        if num < 0:
            return None
        try:
            return (num / den) ** (1.0 / (g - b))
        except OverflowError:  # gamma - beta tiny: the threshold is out of float range
            return math.inf


def decision_indicators(dist: SensingDistribution, scenario: MarketScenario,
                        profile: RiskProfile) -> DecisionIndicators:
    t = _Terms(dist, scenario, profile)
    n, k = t.size, t.pivot
    m, h, clamped = {}, {}, set()
    for j in range(k + 1, n + 1):
        val = t.indicator(j, t.a(j))
        if val is None:
            clamped.add(("M", j))
            val = 0.0
        m[j] = val
    for j in range(k + 1, n):
        val = t.indicator(j, t.a(j + 1))
        if val is None:
            clamped.add(("H", j))
            val = 0.0
        h[j] = val
    return DecisionIndicators(k, m, h, frozenset(clamped))


def _g(t: _Terms, j: int, b_s):
    s, pr = t.s, t.pr
    b, g = pr.beta, pr.gamma
    gains = t.gain_sum(j)
    tail = t.tail_weight(j)
    loss_term = g * t.loss * np.power(b_s, g - b) / (b * gains)
    sat_term = s.sensing_cost * tail * np.power(s.demand * s.leasing_cost / b_s - s.sensing_cost, b - 1) / gains
    return 1.0 - loss_term - sat_term


def g(j: int, b_s, dist: SensingDistribution, scenario: MarketScenario, profile: RiskProfile):
    """First-order function of cell ``j`` (B_s in [D/alpha_{j+1}, D/alpha_j]).

    The utility derivative on that cell equals a positive factor times
    ``g(j, B_s)``, so its sign decides whether sensing more helps.  Strictly
    decreasing in ``B_s``; valid for ``pivot+1 <= j <= I-1`` and
    ``0 < B_s < D c_l / c_s``.
    """
    t = _Terms(dist, scenario, profile)
    if not t.pivot + 1 <= j <= t.size - 1:
        raise ValueError(f"g_j defined for j in [{t.pivot + 1}, {t.size - 1}], got {j}")
    out = _g(t, j, np.asarray(b_s, dtype=float))
    return out if out.ndim else float(out)


def _root(f, lo, hi, tol, what):
    f_lo, f_hi = f(lo), f(hi)
    if not (f_lo > 0 > f_hi):
        raise NoSignChange(f"{what}: f({lo:.6g})={f_lo:.3g}, f({hi:.6g})={f_hi:.3g}")
    return bisect(f, lo, hi, xtol=tol, rtol=4 * np.finfo(float).eps, maxiter=500)


def g_root(j: int, dist: SensingDistribution, scenario: MarketScenario,
           profile: RiskProfile, tol: float | None = None) -> float:
    """Zero of ``g_j`` inside [D/alpha_{j+1}, D/alpha_j] by bisection."""
    t = _Terms(dist, scenario, profile)
    if not t.pivot + 1 <= j <= t.size - 1:
        raise ValueError(f"g_j defined for j in [{t.pivot + 1}, {t.size - 1}], got {j}")
    return _g_root(t, j, tol)


def _g_root(t, j, tol):
    D = t.s.demand
    tol = DEFAULT_REL_TOL * D if tol is None else tol
    lo, hi = D / t.a(j + 1), D / t.a(j)
    return _root(lambda x: float(_g(t, j, x)), lo, hi, tol, f"g_{j}")


def _result(b_s, scenario, dist, profile, rp, label):
    return build_result(
        b_s, scenario, dist,
        utility=pt_utility(b_s, scenario, dist, profile, rp),
        provenance=Provenance.closed_form(label),
        fingerprint=fingerprint(scenario, dist, profile, rp),
    )


def pt_riskfree_bs(scenario, dist, profile, tol=None) -> tuple[float, str]:
    """Optimal sensing amount and table-row label under the risk-free reference."""
    t = _Terms(dist, scenario, profile)
    ind = decision_indicators(dist, scenario, profile)
    D, n, k = scenario.demand, t.size, t.pivot
    m, h = ind.m, ind.h
    first = k + 1
    if first < n and D <= m[first]:
        return D / t.a(first), f"D<=M_{first}"
    for j in range(first, n):
        if m[j] < D < h[j]:
            return _g_root(t, j, tol), f"M_{j}<D<H_{j}"
        if h[j] <= D < m[j + 1]:
            return D / t.a(j + 1), f"H_{j}<=D<M_{j + 1}"
    if D >= m[n]:
        return m[n] / t.a(n), f"D>=M_{n}"
    # only reachable when pivot+1 == I
    return D / t.a(n), f"D<=M_{n}"


def solve_pt_riskfree(scenario: MarketScenario, dist: SensingDistribution,
                      profile: RiskProfile, tol: float | None = None) -> SolveResult:
    """Prospect-theory optimum with reference point D(pi - c_l).

    Needs beta < gamma and alpha_1 < c_s/c_l < alpha_I; otherwise raises
    :class:`AssumptionViolated` / :class:`PivotOutOfRange`.
    """
    b_s, label = pt_riskfree_bs(scenario, dist, profile, tol)
    return _result(b_s, scenario, dist, profile, ReferencePoint.risk_free(), label)


def eut_bs(scenario: MarketScenario, dist: SensingDistribution) -> tuple[float, str]:
    """Risk-neutral optimum.

    Expected profit is concave piecewise linear with slope
    c_l * sum_{i<=j} p_i alpha_i - c_s on the cell where outcomes 1..j are
    not saturated.  Walking right while the slope is strictly positive stops
    at the smallest optimal B_s, which is how exact threshold ties resolve.
    """
    cs, cl, D = scenario.sensing_cost, scenario.leasing_cost, scenario.demand
    alphas, probs = dist.alphas, dist.probs
    partial = np.cumsum(np.asarray(alphas) * np.asarray(probs))
    slopes = cl * partial - cs
    if slopes[-1] <= 0:
        return 0.0, "c_l/c_s<=1/E[alpha]"
    k = int(np.argmax(slopes > 0)) + 1  # smallest j with a rising cell
    if alphas[k - 1] == 0:
        raise DegenerateThreshold("D/alpha_1 undefined with alpha_1 = 0")
    b_s = min(D / alphas[k - 1], D * cl / cs)
    if k == 1:
        return b_s, "c_l/c_s>=1/(alpha_1 p_1)"
    return b_s, f"D/alpha_{k}"


def solve_eut(scenario: MarketScenario, dist: SensingDistribution) -> SolveResult:
    b_s, label = eut_bs(scenario, dist)
    profile = RiskProfile.eut()
    rp = ReferencePoint.custom(0.0)
    return _result(b_s, scenario, dist, profile, rp, f"EUT {label}")


def _check_binary(p1, profile):
    if not 0 < p1 < 1:
        raise InvalidModel(f"p1 must lie in (0, 1), got {p1}")
    if profile.beta != profile.gamma:
        raise AssumptionViolated(
            f"binary solvers need beta == gamma (got {profile.beta}, {profile.gamma})"
        )


def binary_weight_ratio(p1: float, profile: RiskProfile) -> float:
    """w(p1) / w(1 - p1)."""
    return weight(p1, profile) / weight(1.0 - p1, profile)


def riskfree_threshold(p1: float, profile: RiskProfile) -> float:
    """Cost ratio above which the binary operator senses the whole demand.

    Sensing pays iff w(p2)(c_l - c_s)^beta > lam w(p1) c_s^beta; the loss
    penalty stays inside the bracket and drops out when lam = 1.
    """
    return (profile.lam * binary_weight_ratio(p1, profile)) ** (1.0 / profile.beta) + 1.0


def solve_binary_riskfree(scenario: MarketScenario, p1: float, profile: RiskProfile) -> SolveResult:
    _check_binary(p1, profile)
    r = riskfree_threshold(p1, profile)
    if scenario.cost_ratio > r:
        b_s, label = scenario.demand, "binary risk-free: c_l/c_s>r"
    else:
        b_s, label = 0.0, "binary risk-free: c_l/c_s<=r"
    dist = SensingDistribution.binary(p1)
    return _result(b_s, scenario, dist, profile, ReferencePoint.risk_free(), label)


def refpoint_threshold(p1: float, profile: RiskProfile) -> float:
    return 1.0 + binary_weight_ratio(p1, profile)


def _u_high(b_s, scenario, w1, w2, profile):
    cs, cl, D = scenario.sensing_cost, scenario.leasing_cost, scenario.demand
    b, lam = profile.beta, profile.lam
    return -lam * w1 * (b_s * cs + D * (cl - cs)) ** b - lam * w2 * ((D - b_s) * (cl - cs)) ** b


def _du_low(b_s, scenario, w1, w2, profile):
    cs, cl, D = scenario.sensing_cost, scenario.leasing_cost, scenario.demand
    b = profile.beta
    if b_s >= D:
        return -math.inf if b < 1 else (cl - cs) * w2 - cs * w1
    return (-cs * b * (D * cs - b_s * cs) ** (b - 1) * w1
            + b * (cl - cs) * (b_s * (cl - cs) + D * cs) ** (b - 1) * w2)


def solve_binary_refpoint(scenario: MarketScenario, p1: float, profile: RiskProfile,
                          rp: ReferencePoint, tol: float | None = None) -> SolveResult:
    """Binary-outcome optimum under the high or low reference point.

    High: utility is convex on [0, D] (both outcomes are losses), so the
    optimum is an endpoint; B_s = D whenever the slope at 0 is non-negative,
    otherwise the better of {0, D}.  With a linear valuation the utility is
    flat at the threshold and the tie goes to B_s = 0.  Low: utility is concave on [0, D]; zero
    when the slope at 0 is negative, else the stationary point (or D when the
    valuation is linear).
    """
    _check_binary(p1, profile)
    if rp.kind not in ("high", "low"):
        raise AssumptionViolated(f"binary reference-point solver needs high/low, got {rp.kind}")
    D = scenario.demand
    w1, w2 = weight(p1, profile), weight(1.0 - p1, profile)
    rising = scenario.cost_ratio >= refpoint_threshold(p1, profile)
    if rp.kind == "high":
        if profile.beta == 1.0:
            # linear: flat exactly at the threshold, where ties go to the smaller amount
            cs, cl = scenario.sensing_cost, scenario.leasing_cost
            b_s = D if w2 * (cl - cs) - w1 * cs > 0 else 0.0
            label = "high: linear valuation"
        elif rising:
            b_s, label = D, "high: c_l/c_s>=1+w1/w2"
        else:
            u0 = _u_high(0.0, scenario, w1, w2, profile)
            uD = _u_high(D, scenario, w1, w2, profile)
            b_s = D if uD > u0 else 0.0
            label = "high: c_l/c_s<1+w1/w2, endpoint"
    else:
        if not rising:
            b_s, label = 0.0, "low: c_l/c_s<1+w1/w2"
        elif profile.beta == 1.0:
            slope = _du_low(0.0, scenario, w1, w2, profile)
            b_s = D if slope > 0 else 0.0
            label = "low: linear valuation"
        else:
            f = lambda x: _du_low(x, scenario, w1, w2, profile)
            if f(0.0) <= 0:
                b_s = 0.0
            else:
                tol = DEFAULT_REL_TOL * D if tol is None else tol
                b_s = _root(f, 0.0, D, tol, "U'_low")
            label = "low: c_l/c_s>=1+w1/w2, stationary point"
    dist = SensingDistribution.binary(p1)
    return _result(b_s, scenario, dist, profile, rp, label)


def solve_closed_form(scenario: MarketScenario, dist: SensingDistribution,
                      profile: RiskProfile, rp: ReferencePoint,
                      tol: float | None = None) -> SolveResult:
    """Route an instance to whichever analytic solver covers it.

    Raises :class:`AssumptionViolated` (or a subclass) when none does.
    """
    if profile.is_eut:
        # linear valuation with w(p) = p: every reference point only shifts U
        b_s, label = eut_bs(scenario, dist)
        return _result(b_s, scenario, dist, profile, rp, f"EUT {label}")
    if dist.is_binary and profile.beta == profile.gamma:
        p1 = dist.probs[0]
        if rp.kind == "risk_free":
            return solve_binary_riskfree(scenario, p1, profile)
        if rp.kind in ("high", "low"):
            return solve_binary_refpoint(scenario, p1, profile, rp, tol)
    if rp.kind != "risk_free":
        raise AssumptionViolated(f"no closed form for reference point {rp.kind!r}")
    b_s, label = pt_riskfree_bs(scenario, dist, profile, tol)
    return _result(b_s, scenario, dist, profile, rp, label)
