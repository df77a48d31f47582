import math

import numpy as np
import pytest

from ptsolver.errors import InvalidModel
from ptsolver.market import SensingDistribution, tradeoff_metrics
from ptsolver.prospect import (
    ReferencePoint,
    RiskProfile,
    pt_utility,
    utility_curve,
    validate_assumption1,
    value,
    weight,
)


@pytest.mark.parametrize("beta, gamma, ok", [(0.5, 0.8, True), (1, 1, False), (0.8, 0.5, False)])
def test_assumption1(beta, gamma, ok):
    assert validate_assumption1(RiskProfile(1, beta, gamma, 1)) is ok


def test_value_examples():
    assert value(0.0, RiskProfile(2.25, 0.88, 0.88, 1)) == 0.0
    assert value(1.0, RiskProfile(1, 0.88, 1, 1)) == pytest.approx(1.0)
    assert value(-1.0, RiskProfile(2.25, 0.5, 0.88, 1)) == pytest.approx(-2.25)
    assert value(4.0, RiskProfile(1, 0.5, 1, 1)) == pytest.approx(2.0)


def test_value_vectorized_and_finite():
    prof = RiskProfile(2, 0.3, 0.7, 1)
    xs = np.array([-1e6, -3.0, 0.0, 2.0, 1e6])
    out = value(xs, prof)
    assert out.shape == xs.shape and np.all(np.isfinite(out))
    assert np.all(np.diff(out) > 0)


def test_weight_examples():
    for mu in (0.3, 0.65, 1.0):
        prof = RiskProfile(1, 1, 1, mu)
        assert weight(1.0, prof) == 1.0
        assert weight(math.exp(-1), prof) == pytest.approx(math.exp(-1))
    for p in (0.01, 0.3, 0.77):
        assert weight(p, RiskProfile.eut()) == pytest.approx(p)
    with pytest.raises(InvalidModel):
        weight(0.0, RiskProfile.eut())


def test_profile_ranges():
    with pytest.raises(InvalidModel):
        RiskProfile(0.5, 0.5, 0.5, 1)
    with pytest.raises(InvalidModel):
        RiskProfile(1, 0, 0.5, 1)
    with pytest.raises(InvalidModel):
        RiskProfile(1, 0.5, 1.2, 1)


def test_reference_points(fig3_market):
    s = fig3_market
    assert ReferencePoint.risk_free().resolve(s) == 30
    assert ReferencePoint.high().resolve(s) == 60
    assert ReferencePoint.low().resolve(s) == 10
    assert ReferencePoint.custom(-4).resolve(s) == -4
    with pytest.raises(InvalidModel):
        ReferencePoint("custom")
    with pytest.raises(InvalidModel):
        ReferencePoint("median")


def test_utility_zero_at_no_sensing(fig3_market, two_point, risk_free):
    prof = RiskProfile(2, 0.5, 0.8, 0.7)
    assert pt_utility(0.0, fig3_market, two_point, prof, risk_free) == 0.0


def test_eut_utility_is_expected_profit(fig3_market, two_point, eut):
    for b in (0.0, 3.0, 12.5, 20.0):
        u = pt_utility(b, fig3_market, two_point, eut, ReferencePoint.custom(0))
        assert u == pytest.approx(tradeoff_metrics(b, fig3_market, two_point)[0])


def test_utility_pinned(fig3_market, two_point, risk_free):
    # alpha=0.2 loses 5 against the reference, alpha=0.8 gains 10
    prof = RiskProfile(2, 0.5, 0.8, 1)
    hand = 0.5 * (math.sqrt(10) - 2 * 5 ** 0.8)
    got = pt_utility(5.0, fig3_market, two_point, prof, risk_free)
    assert got == pytest.approx(hand, rel=1e-12)
    assert got == pytest.approx(-2.042759488304288, rel=1e-12)


def test_utility_curve_matches_scalar(fig3_market, risk_free):
    dist = SensingDistribution((0.1, 0.5, 0.9), (0.2, 0.5, 0.3))
    prof = RiskProfile(1.7, 0.6, 0.85, 0.8)
    xs = np.linspace(0, 25, 11)
    curve = utility_curve(xs, fig3_market, dist, prof, risk_free)
    for x, u in zip(xs, curve):
        assert u == pt_utility(float(x), fig3_market, dist, prof, risk_free)


def test_negative_sensing_rejected(fig3_market, two_point, eut, risk_free):
    with pytest.raises(InvalidModel):
        pt_utility(-1.0, fig3_market, two_point, eut, risk_free)
