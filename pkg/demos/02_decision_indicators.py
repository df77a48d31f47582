"""Walk through the demand thresholds that pick the optimal sensing amount.

The indicators M_j and H_j do not depend on demand, so one table of them
tells us the answer for every D.  We then sweep D across the thresholds and
check each answer against the brute-force maximizer.
"""

import numpy as np

from ptsolver import (
    MarketScenario,
    OracleConfig,
    ReferencePoint,
    RiskProfile,
    SensingDistribution,
    decision_indicators,
    maximize_utility,
    solve_closed_form,
    verify,
)

dist = SensingDistribution((0.3, 0.6, 0.8, 0.95), (0.1, 0.7, 0.1, 0.1))
profile = RiskProfile(lam=1.5, beta=0.5, gamma=0.9, mu=1.0)
base = MarketScenario(sensing_cost=2.0, leasing_cost=5.0, price=8.0, demand=10.0)

ind = decision_indicators(dist, base, profile)
print(f"pivot index {ind.pivot_index} (c_s/c_l = {base.sensing_cost / base.leasing_cost})")
for j in sorted(ind.m):
    h = f"   H_{j} = {ind.h[j]:10.4f}" if j in ind.h else ""
    print(f"  M_{j} = {ind.m[j]:10.4f}{h}")

rp = ReferencePoint.risk_free()
print("\n   demand      B_s*   row                 oracle check")
for demand in np.geomspace(2, 300, 9):
    market = MarketScenario(2.0, 5.0, 8.0, float(demand))
    closed = solve_closed_form(market, dist, profile, rp)
    oracle = maximize_utility(market, dist, profile, rp, OracleConfig())
    ok = verify(closed, oracle, tol_bs=2e-4 * demand).passed
    print(f"{demand:9.3f} {closed.b_s_star:9.3f}   {closed.provenance.label:<18}  {'agrees' if ok else 'DIFFERS'}")
