"""
Ultimatum tournament: fairness and spite survive
================================================

Every individual carries a strategy pair (offer m, accept offers >= m').
Random pairs play; the higher scorer converts the loser.  High offers are
eliminated first, then low acceptance thresholds; what remains are the
strategies (m <= M/2, m' >= M/2) whose mutual encounters are all ties.
"""

from insuperable.sim import (
    UltimatumConfig,
    survivors_within_fair_bounds,
    ultimatum_tournament,
)

cfg = UltimatumConfig(
    M=20,
    copies_per_strategy=2,
    steps=6_000_000,
    seed=2024,
    snapshot_every=2000,
)
trace = ultimatum_tournament(cfg)

print(f"population {cfg.population}, ran {trace.steps_run} steps, "
      f"stopped by {trace.termination}")

for step, grid in trace.snapshots[:: max(1, len(trace.snapshots) // 6)]:
    alive = int((grid > 0).sum())
    max_offer = max((m for m in range(grid.shape[0]) if grid[m].sum() > 0), default=0)
    min_thresh = min(
        (t for t in range(grid.shape[1]) if grid[:, t].sum() > 0), default=0
    )
    print(f"  step {step:>8}: {alive:3d} classes alive, "
          f"highest offer {max_offer:2d}, lowest threshold {min_thresh:2d}")

survivors = trace.survivors()
print(f"\nsurvivors: {len(survivors)} classes")
print("  offers range:", min(m for m, _ in survivors), "..", max(m for m, _ in survivors))
print("  thresholds range:", min(t for _, t in survivors), "..", max(t for _, t in survivors))
print("all survivors satisfy m <= 10 <= m':", survivors_within_fair_bounds(trace))
