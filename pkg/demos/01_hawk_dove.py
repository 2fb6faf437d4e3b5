"""
The hawk-dove game: rational play versus insuperable play
=========================================================

Two individuals contest a good of value G; fighting costs C.  The mixed
Nash equilibrium plays hawk with frequency G/C, yet the hawk strategy is
insuperable: whoever plays it can never end up with less than the
opponent.  In a population of two, violence pays.
"""

from insuperable import MixedStrategy, catalog, check_insuperable, net_payoff
from insuperable.nash import nash_vs_insuperable

game = catalog("hawk_dove", G=3, C=10)
print("payoff matrix A = B =")
for row in game.A:
    print("   ", [str(v) for v in row])

print("\nnet payoff matrix L = A^T - B =")
for row in net_payoff(game).L:
    print("   ", [str(v) for v in row])

report = nash_vs_insuperable(game)
print("\nequilibria:")
for eq in report.equilibria:
    print(f"    x = {[str(w) for w in eq.x.weights]}, "
          f"y = {[str(w) for w in eq.y.weights]} ({eq.kind})")

witness = report.insuperable.a_insuperable
print(f"\ninsuperable strategy for the row player: {[str(w) for w in witness.weights]}")
print("hawk  :", check_insuperable(game, "A", MixedStrategy.pure(0, 2)))
print("dove  :", check_insuperable(game, "A", MixedStrategy.pure(1, 2)))
print("\nThe mixed equilibrium weights hawk at 3/10, but pure hawk is the")
print("strategy no opponent can out-earn.")
