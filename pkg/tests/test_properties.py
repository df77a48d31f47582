"""Randomized invariants (hypothesis)."""

import math

import numpy as np
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from ptsolver.closed_form import decision_indicators, find_pivot_index, solve_closed_form
from ptsolver.docfile import ScenarioDocument, dump_document, parse_document
from ptsolver.errors import PivotOutOfRange
from ptsolver.market import MarketScenario, SensingDistribution, optimal_leasing, profit, profit_after_leasing
from ptsolver.prospect import ReferencePoint, RiskProfile, pt_utility, value, weight

unit = st.floats(0.05, 0.95)


@st.composite
def scenarios(draw):
    price = draw(st.floats(1.0, 20.0))
    leasing = price * draw(st.floats(0.2, 0.95))
    sensing = leasing * draw(st.floats(0.05, 0.95))
    return MarketScenario(sensing, leasing, price, draw(st.floats(0.5, 50.0)))


@st.composite
def distributions(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    alphas = sorted(set(round(a, 6) for a in draw(st.lists(st.floats(0.0, 1.0), min_size=n, max_size=n))))
    raw = np.array(draw(st.lists(st.floats(0.05, 1.0), min_size=len(alphas), max_size=len(alphas))))
    probs = raw / raw.sum()
    probs[-1] = 1.0 - probs[:-1].sum()
    assume(np.all(probs > 0))
    return SensingDistribution(tuple(alphas), tuple(probs))


@st.composite
def profiles(draw):
    beta = draw(st.floats(0.1, 1.0))
    gamma = draw(st.floats(0.1, 1.0))
    return RiskProfile(draw(st.floats(1.0, 5.0)), beta, gamma, draw(st.floats(0.1, 1.0)))


@given(st.floats(-1e4, 1e4), st.floats(-1e4, 1e4), profiles())
def test_value_monotone(x, y, prof):
    assume(x < y)
    assert value(x, prof) <= value(y, prof)


@given(st.floats(1e-6, 1.0), st.floats(1e-6, 1.0), st.floats(0.05, 1.0))
def test_weight_monotone_in_unit_interval(p, q, mu):
    prof = RiskProfile(1, 1, 1, mu)
    assume(p < q)
    assert 0 < weight(p, prof) <= weight(q, prof) <= 1


@given(scenarios(), st.floats(0, 100), st.floats(0, 1), st.floats(0, 100))
def test_stage_two_lease_optimal(s, b_s, alpha, b_l):
    best = profit_after_leasing(b_s, alpha, s)
    assert optimal_leasing(b_s, alpha, s) >= 0
    assert best >= profit(b_s, b_l, alpha, s) - 1e-9 * (1 + abs(best))


@given(scenarios(), distributions(), profiles())
def test_no_sensing_is_neutral(s, d, prof):
    assert pt_utility(0.0, s, d, prof, ReferencePoint.risk_free()) == 0.0


@given(scenarios(), distributions(), profiles(), st.floats(1.0001, 10.0))
@settings(max_examples=60)
def test_oversensing_loses(s, d, prof, factor):
    u0 = pt_utility(0.0, s, d, prof, ReferencePoint.risk_free())
    assert pt_utility(s.search_upper * factor, s, d, prof, ReferencePoint.risk_free()) < u0


@given(scenarios(), distributions(max_size=5), profiles())
@settings(max_examples=60, suppress_health_check=[HealthCheck.filter_too_much])
def test_indicators_non_negative(s, d, prof):
    assume(prof.beta < prof.gamma)
    try:
        find_pivot_index(d, s)
    except PivotOutOfRange:
        assume(False)
    ind = decision_indicators(d, s, prof)
    for v in list(ind.m.values()) + list(ind.h.values()):
        assert v >= 0 and not math.isnan(v)


@given(scenarios(), distributions(max_size=5), profiles())
@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
def test_closed_form_beats_coarse_grid(s, d, prof):
    assume(prof.beta < prof.gamma)
    try:
        res = solve_closed_form(s, d, prof, ReferencePoint.risk_free())
    except PivotOutOfRange:
        assume(False)
    grid = np.linspace(0, s.search_upper, 257)
    best = max(pt_utility(float(x), s, d, prof, ReferencePoint.risk_free()) for x in grid)
    assert res.utility >= best - 1e-9 * (1 + abs(best))


@given(scenarios(), distributions(), profiles())
def test_document_round_trip(s, d, prof):
    doc = ScenarioDocument(s, d, prof, ReferencePoint.risk_free())
    assert parse_document(dump_document(doc)) == doc
