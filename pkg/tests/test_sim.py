import numpy as np
import pytest

from insuperable.errors import DomainError
from insuperable.moran import TwoByTwoPayoff, fixation_probabilities, hawk_dove_payoff
from insuperable.rng import derive_key, generator
from insuperable.sim import (
    BOTH,
    SINGLE,
    UltimatumConfig,
    moran_monte_carlo,
    survivors_within_fair_bounds,
    trace_to_csv,
    ultimatum_tournament,
)


def test_derived_keys_are_stable_and_distinct():
    assert derive_key(42) == derive_key(42)
    assert derive_key(42, 1) != derive_key(42, 2)
    assert derive_key(1) != derive_key(2)
    with pytest.raises(ValueError):
        derive_key(-1)


def test_generator_streams_reproducible():
    a = generator(7, 3).random(size=5)
    b = generator(7, 3).random(size=5)
    assert (a == b).all()
    c = generator(7, 4).random(size=5)
    assert not (a == c).all()


def test_config_validation():
    with pytest.raises(DomainError):
        UltimatumConfig(M=0, copies_per_strategy=1, steps=1, seed=1)
    with pytest.raises(DomainError):
        UltimatumConfig(M=4, copies_per_strategy=1, steps=1, seed=1, role_mode="swapped")
    cfg = UltimatumConfig(M=4, copies_per_strategy=2, steps=0, seed=1)
    assert cfg.threshold_max == 5
    assert cfg.population == 5 * 6 * 2


def test_zero_steps_keeps_initial_distribution():
    cfg = UltimatumConfig(M=6, copies_per_strategy=3, steps=0, seed=9)
    trace = ultimatum_tournament(cfg)
    assert trace.steps_run == 0
    assert (trace.final_counts() == 3).all()


def test_population_is_conserved():
    cfg = UltimatumConfig(M=4, copies_per_strategy=5, steps=20000, seed=11, snapshot_every=2500)
    trace = ultimatum_tournament(cfg)
    for _, grid in trace.snapshots:
        assert grid.sum() == cfg.population


def test_tournament_deterministic():
    cfg = UltimatumConfig(M=5, copies_per_strategy=4, steps=30000, seed=123, snapshot_every=5000)
    assert trace_to_csv(ultimatum_tournament(cfg)) == trace_to_csv(ultimatum_tournament(cfg))


def test_tournament_seed_changes_trace():
    base = dict(M=5, copies_per_strategy=4, steps=30000, snapshot_every=5000)
    a = ultimatum_tournament(UltimatumConfig(seed=1, **base))
    b = ultimatum_tournament(UltimatumConfig(seed=2, **base))
    assert trace_to_csv(a) != trace_to_csv(b)


def test_extinct_classes_never_return():
    cfg = UltimatumConfig(M=6, copies_per_strategy=10, steps=300000, seed=17, snapshot_every=2000)
    trace = ultimatum_tournament(cfg)
    dead = set()
    for _, grid in trace.snapshots:
        now_alive = {tuple(idx) for idx in np.argwhere(grid > 0)}
        assert not (dead & now_alive)
        everything = {(m, t) for m in range(grid.shape[0]) for t in range(grid.shape[1])}
        dead |= everything - now_alive


def test_survivor_bounds_small_run_both_modes():
    for mode in (SINGLE, BOTH):
        cfg = UltimatumConfig(
            M=6, copies_per_strategy=25, steps=2_000_000, seed=42, role_mode=mode
        )
        trace = ultimatum_tournament(cfg)
        assert trace.termination == "neutral_population"
        assert survivors_within_fair_bounds(trace)


def test_trace_csv_format():
    cfg = UltimatumConfig(M=2, copies_per_strategy=1, steps=0, seed=5)
    text = trace_to_csv(ultimatum_tournament(cfg))
    lines = text.strip().split("\n")
    assert lines[0] == "step,m,m_prime,count"
    assert len(lines) == 1 + 3 * 4  # every class once, count 1


def test_moran_mc_matches_exact():
    payoff = TwoByTwoPayoff(1, 3, 2, 4)
    exact = float(fixation_probabilities(payoff, 4).F[1])
    est = moran_monte_carlo(payoff, N=4, i0=1, replicates=100_000, seed=7)
    assert abs(est.fixation_rate - exact) <= 3 * est.standard_error


def test_moran_mc_certain_and_impossible():
    assert moran_monte_carlo(hawk_dove_payoff(3, 10), 2, 1, 500, seed=3).fixation_rate == 1.0
    assert moran_monte_carlo(TwoByTwoPayoff(1, 1, 1, 1), 5, 0, 100, seed=3).fixation_rate == 0.0
    assert moran_monte_carlo(TwoByTwoPayoff(1, 1, 1, 1), 5, 5, 100, seed=3).fixation_rate == 1.0


def test_moran_mc_deterministic_and_batch_invariant():
    payoff = TwoByTwoPayoff(2, 1, 1, 2)
    a = moran_monte_carlo(payoff, N=6, i0=2, replicates=5000, seed=99)
    b = moran_monte_carlo(payoff, N=6, i0=2, replicates=5000, seed=99)
    assert a == b
    # a different batch size regroups replicates into different streams, but
    # each batch stays internally deterministic; only the aggregate varies
    # within sampling error
    c = moran_monte_carlo(payoff, N=6, i0=2, replicates=5000, seed=99, batch_size=1000)
    assert abs(c.fixation_rate - a.fixation_rate) <= 4 * (a.standard_error + 1e-9)


def test_moran_mc_domain_errors():
    with pytest.raises(DomainError):
        moran_monte_carlo(TwoByTwoPayoff(1, 1, 1, 1), 1, 0, 10, seed=1)
    with pytest.raises(DomainError):
        moran_monte_carlo(TwoByTwoPayoff(1, 1, 1, 1), 4, 9, 10, seed=1)
    with pytest.raises(DomainError):
        moran_monte_carlo(TwoByTwoPayoff(-1, -1, -1, -1), 4, 2, 10, seed=1)
