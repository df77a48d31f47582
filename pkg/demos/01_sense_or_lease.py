"""How much spectrum should an operator sense before leasing the rest?

One market, two operators: a risk-neutral one and a loss-averse one with
curved valuations.  Prints each optimum with the per-outcome leases and
the profit spread it buys.
"""

from ptsolver import (
    MarketScenario,
    ReferencePoint,
    RiskProfile,
    SensingDistribution,
    solve_closed_form,
)

market = MarketScenario(sensing_cost=2.0, leasing_cost=5.0, price=8.0, demand=10.0)
# sensing yields 20% of the band half the time and 80% otherwise
outcomes = SensingDistribution.from_pairs([(0.2, 0.5), (0.8, 0.5)])

operators = {
    "risk neutral": RiskProfile.eut(),
    "loss averse": RiskProfile(lam=2.25, beta=0.5, gamma=0.8, mu=0.7),
}

for name, profile in operators.items():
    res = solve_closed_form(market, outcomes, profile, ReferencePoint.risk_free())
    print(f"{name}: sense {res.b_s_star:.4f}  ({res.provenance})")
    for o in res.per_outcome:
        print(f"    alpha={o.alpha:.1f}  lease {o.b_l_star:7.4f}  profit {o.profit:7.3f}")
    print(f"    expected {res.expected_profit:.3f}, worst {res.min_possible_profit:.3f}, "
          f"best {res.max_possible_profit:.3f}")

print(f"leasing everything earns {market.risk_free_profit:.1f} with certainty")
