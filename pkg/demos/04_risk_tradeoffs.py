"""What risk preferences cost in expected profit, and what they buy.

Runs the two bundled tradeoff sweeps: loss curvature gamma with linear
gains, and gain curvature beta with linear losses.  A gambler-like operator
(gamma < 1) gives up expected profit for a better best case; a cautious one
(beta < 1) trades it for the worst case.  When the risk-neutral operator
already refuses to sense, though, any sensing at all lowers the worst case.
"""

from ptsolver import load_document, run_sweep

for name, axis in (("fig5a", "gamma"), ("fig5b", "beta")):
    table = run_sweep(load_document(name).sweep)
    print(f"\n{name}: sweep over {axis}")
    print(f"  c_s  {axis:>5}    B_s*   expected   worst    best")
    for row in table.ok_rows():
        print(f"  {row['c_s']:.0f}   {row[axis]:5.2f} {row['b_s_star']:8.4f} {row['expected_profit']:9.3f} "
              f"{row['min_possible']:8.3f} {row['max_possible']:7.3f}")
