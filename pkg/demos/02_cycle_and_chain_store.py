"""
When Nash and insuperability point in different directions
==========================================================

A three-strategy cyclic game has a strict pure Nash equilibrium that loses
head-to-head contests, while the unique insuperable strategy is the
uniform mix that never loses one.  The chain-store game shows the other
extreme: a whole continuum of insuperable pairs.
"""

from insuperable import MixedStrategy, catalog, insuperable_vertices, payoffs
from insuperable.nash import nash_vs_insuperable

cycle = catalog("three_strategy_cycle")
report = nash_vs_insuperable(cycle)

print("three-strategy cycle")
print("  Nash equilibria:", [
    (eq.x.pure_index(), eq.y.pure_index(), "strict" if eq.strict else "weak")
    for eq in report.equilibria
])
print("  insuperable vertices:",
      [[str(w) for w in v.weights] for v in insuperable_vertices(cycle, "A")])

star = MixedStrategy.uniform(3)
for i in range(3):
    pa, pb = payoffs(cycle, MixedStrategy.pure(i, 3), star)
    print(f"  pure strategy {i+1} vs the uniform mix: both earn {pa}")

print("  -> the Nash strategy e3 can be beaten (by e1); the uniform mix ties everyone.")

chain = catalog("chain_store")
print("\nchain store (monopolist vs entrant)")
verts = insuperable_vertices(chain, "A")
print("  monopolist insuperable vertices:", [[str(w) for w in v.weights] for v in verts])
print("  entrant insuperable strategy:", [
    [str(w) for w in v.weights] for v in insuperable_vertices(chain, "B")
])
rep = nash_vs_insuperable(chain)
print("  Nash equilibria:", [(eq.x.pure_index(), eq.y.pure_index()) for eq in rep.equilibria])
print("  -> every monopolist mix is insuperable; entering ('in') is insuperable for")
print("     the entrant, and (cooperate, in) is the profitable insuperable pair.")
