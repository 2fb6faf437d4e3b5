"""
Reducing N-player games to pairwise encounters
==============================================

A two-strategy N-player game whose payoffs are affine in the co-player
count is equivalent to playing N-1 separate two-player rounds.  The public
good game reduces for every (r, N) and always leaves defection
insuperable; the three-player zerinho-ou-um game is not reducible until
its immaterial homogeneous-population payoffs are adjusted.
"""

from insuperable import classify
from insuperable.multiplayer import (
    extend_to_n,
    is_reducible,
    make_reducible_3,
    n_player_classify,
    pgg,
    zerinho_modified,
    zerinho_original,
)

for r, n in [(3, 5), (7, 5)]:
    game = pgg(r, n)
    cls = n_player_classify(game)
    reduced = is_reducible(game).two_player
    print(f"PGG r={r}, N={n}:")
    print("  a =", [str(v) for v in game.a])
    print("  b =", [str(v) for v in game.b])
    print("  reduced matrix:", [[str(v) for v in row] for row in reduced.A])
    print(f"  defect insuperable: {cls.B_insuperable}; "
          f"cooperate dominates: {cls.A_dominates} (r {'>=' if r >= n else '<'} N)")
    rep = classify(reduced)
    print("  2-player witnesses: defect-side", [str(w) for w in rep.b_insuperable.weights])

z = zerinho_original()
print("\nzerinho-ou-um (original):",
      "reducible" if is_reducible(z).reducible else "not reducible")
forced = make_reducible_3(z)
print("after adjusting the homogeneous-population payoffs:",
      "reducible" if is_reducible(forced).reducible else "still not reducible")

zm = zerinho_modified(1)
reduced = is_reducible(zm).two_player
print("modified zerinho reduces to", [[str(v) for v in row] for row in reduced.A],
      "-- a coordination game with L = 0: every strategy is insuperable")
ext = extend_to_n(reduced, 5)
print("extended back to 5 players:", [str(v) for v in ext.a], "/",
      [str(v) for v in ext.b])
