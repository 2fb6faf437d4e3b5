"""Seeded stochastic engines: the ultimatum strategy tournament and
Monte-Carlo Moran runs cross-validating the exact fixation formulas.

Both engines are deterministic functions of their configuration (seed
included).  Moran replicates run in fixed-size batches with independent
derived streams, so they aggregate identically no matter how batches are
scheduled.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .moran import TwoByTwoPayoff, _fitness_parts
from .rng import generator

SINGLE, BOTH = "single", "both"
NEUTRAL_POPULATION, STEP_BUDGET = "neutral_population", "step_budget"


@dataclass(frozen=True)
class UltimatumConfig:
    """Tournament over threshold strategies (m, ">= m'") of the ultimatum game.

    Offers run 0..M; thresholds 0..threshold_max (default M+1, where M+1
    means "always reject").  role_mode "single" plays each drawn pair once
    with the first individual as donor; "both" plays both orderings and
    sums the payoffs.
    """

    M: int
    copies_per_strategy: int
    steps: int
    seed: int
    snapshot_every: int = 0  # 0: only initial and final snapshots
    threshold_max: Optional[int] = None
    role_mode: str = SINGLE

    def __post_init__(self):
        if self.M < 1:
            raise DomainError(f"M must be >= 1, got {self.M}")
        if self.copies_per_strategy < 1:
            raise DomainError("copies_per_strategy must be >= 1")
        if self.steps < 0:
            raise DomainError("steps must be >= 0")
        if self.role_mode not in (SINGLE, BOTH):
            raise DomainError(f"role_mode must be 'single' or 'both', got {self.role_mode!r}")
        if self.threshold_max is None:
            object.__setattr__(self, "threshold_max", self.M + 1)
        if not 0 <= self.threshold_max <= self.M + 1:
            raise DomainError("threshold_max must lie in 0..M+1")
        if self.snapshot_every < 0:
            raise DomainError("snapshot_every must be >= 0")

    @property
    def offers(self) -> int:
        return self.M + 1

    @property
    def thresholds(self) -> int:
        return self.threshold_max + 1

    @property
    def population(self) -> int:
        return self.offers * self.thresholds * self.copies_per_strategy


@dataclass(frozen=True)
class TournamentTrace:
    config: UltimatumConfig
    snapshots: tuple[tuple[int, np.ndarray], ...]  # (step, offers x thresholds counts)
    steps_run: int
    termination: str
    rng_seed: int

    def final_counts(self) -> np.ndarray:
        return self.snapshots[-1][1]

    def survivors(self) -> list[tuple[int, int]]:
        counts = self.final_counts()
        return [(m, t) for m in range(counts.shape[0]) for t in range(counts.shape[1])
                if counts[m, t] > 0]


@dataclass(frozen=True)
class MoranEstimate:
    fixation_rate: float
    standard_error: float
    replicates: int
    seed: int


def _payoff_tables(cfg: UltimatumConfig):
    """pay1[c1][c2], pay2[c1][c2] for class ids c = m * thresholds + t."""
    offers, thresholds = cfg.offers, cfg.thresholds
    nclasses = offers * thresholds
    pay1 = [[0] * nclasses for _ in range(nclasses)]
    pay2 = [[0] * nclasses for _ in range(nclasses)]
    M = cfg.M
    for m1 in range(offers):
        for t1 in range(thresholds):
            c1 = m1 * thresholds + t1
            for m2 in range(offers):
                for t2 in range(thresholds):
                    c2 = m2 * thresholds + t2
                    # first as donor offering m1 against threshold t2
                    d1 = (M - m1) if m1 >= t2 else 0
                    r2 = m1 if m1 >= t2 else 0
                    if cfg.role_mode == SINGLE:
                        pay1[c1][c2] = d1
                        pay2[c1][c2] = r2
                    else:
                        d2 = (M - m2) if m2 >= t1 else 0
                        r1 = m2 if m2 >= t1 else 0
                        pay1[c1][c2] = d1 + r1
                        pay2[c1][c2] = r2 + d2
    return pay1, pay2


def _neutral_among(present, pay1, pay2) -> bool:
    return all(pay1[c1][c2] == pay2[c1][c2] for c1 in present for c2 in present)


def ultimatum_tournament(cfg: UltimatumConfig) -> TournamentTrace:
    """Run the replace-the-loser tournament; deterministic given the seed.

    Each step draws an ordered pair of distinct individuals; they play, the
    higher scorer overwrites the other's strategy, ties are settled by a
    fair coin.  The run stops early once every encounter among surviving
    strategy classes is a tie (the population is then evolutionarily
    neutral and frozen up to label exchanges).
    """
    population = cfg.population
    if population < 2:
        raise DomainError("population must have at least 2 individuals")
    pay1, pay2 = _payoff_tables(cfg)
    thresholds = cfg.thresholds
    nclasses = cfg.offers * thresholds
    pop = [c for c in range(nclasses) for _ in range(cfg.copies_per_strategy)]
    counts = [cfg.copies_per_strategy] * nclasses

    def snapshot(step):
        grid = np.array(counts, dtype=np.int64).reshape(cfg.offers, thresholds)
        return (step, grid)

    snapshots = [snapshot(0)]
    check_every = cfg.snapshot_every if cfg.snapshot_every > 0 else 4096
    gen = generator(cfg.seed, 0x756C74, cfg.M)  # stream tag "ult"
    termination = STEP_BUDGET
    step = 0
    chunk = 8192
    while step < cfg.steps:
        todo = min(chunk, cfg.steps - step)
        first = gen.integers(0, population, size=todo)
        second = gen.integers(0, population - 1, size=todo)
        coins = gen.integers(0, 2, size=todo)
        for idx in range(todo):
            i = int(first[idx])
            j = int(second[idx])
            if j >= i:
                j += 1
            c1, c2 = pop[i], pop[j]
            step += 1
            if c1 != c2:
                s1 = pay1[c1][c2]
                s2 = pay2[c1][c2]
                if s1 > s2:
                    winner, loser, lc = i, j, c2
                elif s2 > s1:
                    winner, loser, lc = j, i, c1
                elif coins[idx]:
                    winner, loser, lc = i, j, c2
                else:
                    winner, loser, lc = j, i, c1
                pop[loser] = pop[winner]
                counts[lc] -= 1
                counts[pop[winner]] += 1
            if cfg.snapshot_every and step % cfg.snapshot_every == 0:
                snapshots.append(snapshot(step))
            if step % check_every == 0:
                present = [c for c in range(nclasses) if counts[c] > 0]
                if _neutral_among(present, pay1, pay2):
                    termination = NEUTRAL_POPULATION
                    break
        else:
            continue
        break
    present = [c for c in range(nclasses) if counts[c] > 0]
    if termination == STEP_BUDGET and _neutral_among(present, pay1, pay2):
        termination = NEUTRAL_POPULATION
    if snapshots[-1][0] != step:
        snapshots.append(snapshot(step))
    return TournamentTrace(
        config=cfg,
        snapshots=tuple(snapshots),
        steps_run=step,
        termination=termination,
        rng_seed=cfg.seed,
    )


def survivors_within_fair_bounds(trace: TournamentTrace) -> bool:
    """True when every surviving class (m, >=t) has m <= M/2 <= t."""
    M = trace.config.M
    half = M / 2
    return all(m <= half <= t for m, t in trace.survivors())


def trace_to_csv(trace: TournamentTrace) -> str:
    """CSV rows step,m,m_prime,count (nonzero counts only)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["step", "m", "m_prime", "count"])
    for step, grid in trace.snapshots:
        for m in range(grid.shape[0]):
            for t in range(grid.shape[1]):
                if grid[m, t]:
                    writer.writerow([step, m, t, int(grid[m, t])])
    return out.getvalue()


def moran_monte_carlo(
    payoff: TwoByTwoPayoff,
    N: int,
    i0: int,
    replicates: int,
    seed: int,
    batch_size: int = 4096,
) -> MoranEstimate:
    """Estimate the fixation probability of i0 initial A's by simulation.

    Simulates the embedded jump chain of the frequency-dependent Moran
    process (self-loops skipped; absorption probabilities are identical)
    in batches with independent derived streams.
    """
    if N < 2:
        raise DomainError(f"population size must be >= 2, got {N}")
    if not 0 <= i0 <= N:
        raise DomainError(f"initial count must lie in 0..{N}, got {i0}")
    if replicates < 1:
        raise DomainError("need at least one replicate")
    up_prob = np.zeros(N + 1)
    for k in range(1, N):
        num, den = _fitness_parts(payoff, k, N)
        if num <= 0 or den < 0:
            raise DomainError(
                f"invalid fitness at k={k}, N={N}: A fitness sign {num}, B fitness sign {den}"
            )
        # p_up / p_down = rho_k; the jump chain moves up w.p. rho/(1+rho)
        up_prob[k] = float(num / (num + den))

    fixed = 0
    done = 0
    batch_index = 0
    while done < replicates:
        size = min(batch_size, replicates - done)
        gen = generator(seed, 0x6D6F72, batch_index)  # stream tag "mor"
        states = np.full(size, i0, dtype=np.int64)
        active = (states > 0) & (states < N)
        while active.any():
            draws = gen.random(size=int(active.sum()))
            current = states[active]
            move_up = draws < up_prob[current]
            states[active] = current + np.where(move_up, 1, -1)
            active = (states > 0) & (states < N)
        fixed += int((states == N).sum())
        done += size
        batch_index += 1
    rate = fixed / replicates
    se = math.sqrt(rate * (1 - rate) / replicates)
    return MoranEstimate(
        fixation_rate=rate, standard_error=se, replicates=replicates, seed=seed
    )
