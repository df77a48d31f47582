"""All-or-nothing sensing: the binary outcome model.

With alpha in {0, 1} the operator either senses the whole demand or none of
it (risk-free reference), and the switch happens at a cost-ratio threshold
r.  Distorting probabilities moves r in opposite directions on either side
of p1 = 0.5.  A high reference point makes the operator sense more than a
low one.
"""

import numpy as np

from ptsolver import (
    MarketScenario,
    ReferencePoint,
    RiskProfile,
    sensing_threshold,
    solve_binary_refpoint,
)

print("threshold r by probability of a failed sensing round")
print("   p1   " + "".join(f"mu={mu:<8}" for mu in (0.4, 0.7, 1.0)))
for p1 in np.linspace(0.1, 0.9, 9):
    row = [sensing_threshold(p1, RiskProfile(1, 1, 1, mu), ReferencePoint.risk_free()) for mu in (0.4, 0.7, 1.0)]
    print(f"  {p1:.1f}  " + "".join(f"{r:<11.4f}" for r in row))

market = MarketScenario(sensing_cost=2.0, leasing_cost=5.0, price=8.0, demand=10.0)
print("\nhigh vs low reference point, beta = gamma = 0.6, lambda = 2")
for p1 in (0.3, 0.5, 0.7):
    prof = RiskProfile(2.0, 0.6, 0.6, 1.0)
    hi = solve_binary_refpoint(market, p1, prof, ReferencePoint.high())
    lo = solve_binary_refpoint(market, p1, prof, ReferencePoint.low())
    print(f"  p1={p1}: high senses {hi.b_s_star:6.3f}, low senses {lo.b_s_star:6.3f}")
