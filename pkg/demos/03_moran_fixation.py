"""
Population size as an evolutionary force
========================================

For a symmetric 2x2 game where strategy B dominates but strategy A is
strictly insuperable, small populations fix A more often than neutral
drift would, and large populations less often.  The weak-selection scan
reproduces the invasion-probability crossover at N_c = 13 for the
hawk-dove game with G = 3, C = 10.
"""

from fractions import Fraction

from insuperable import TwoByTwoPayoff, critical_sizes, fixation_probabilities
from insuperable.moran import hawk_dove_payoff, weak_selection_scan
from insuperable.sim import moran_monte_carlo

payoff = TwoByTwoPayoff(1, 3, 2, 4)  # d > b > c > a: dominated but insuperable
sizes = critical_sizes(payoff)
print(f"critical sizes for (1,3,2,4): N_inf = {sizes.N_inf}, N_sup = {sizes.N_sup}")
for n in (2, 3, 4, 6):
    vec = fixation_probabilities(payoff, n)
    marks = ["+" if vec.F[i] > Fraction(i, n) else "-" for i in range(1, n)]
    print(f"  N={n}: F_i vs i/N -> {' '.join(marks)}")

print("\nweak-selection invasion scan, hawk-dove G=3 C=10:")
scan = weak_selection_scan(hawk_dove_payoff(3, 10), 20)
for row in scan.rows:
    gap = float(row.F1 - row.neutral)
    print(f"  N={row.N:2d}  F_1={float(row.F1):.5f}  1/N={float(row.neutral):.5f}  {gap:+.1e}")
print(f"crossover: hawks invade better than neutral up to N_c = {scan.crossover}")

estimate = moran_monte_carlo(payoff, N=4, i0=1, replicates=100_000, seed=7)
exact = float(fixation_probabilities(payoff, 4).F[1])
print(f"\nMonte-Carlo cross-check at N=4, i0=1: {estimate.fixation_rate:.4f} "
      f"+- {estimate.standard_error:.4f} vs exact {exact:.4f}")
