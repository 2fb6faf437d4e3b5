"""Exact analysis of insuperable strategies in normal-form games.

An insuperable strategy guarantees its player a payoff at least equal to
the opponent's against every opponent strategy.  The package decides and
constructs such strategies exactly (rational arithmetic end to end),
relates them to Nash equilibria, Moran fixation probabilities, N-player
game reduction and one-period market arbitrage, and ships seeded
simulation engines for the stochastic counterparts.
"""

__version__ = "0.1.0"

from .classify import (
    GameValueResult,
    InsuperableReport,
    brute_force_classify,
    check_insuperable,
    classify,
    insuperable_vertices,
    zero_sum_value,
)
from .errors import CapExceeded, DimensionError, DomainError
from .games import (
    BimatrixGame,
    MixedStrategy,
    NetPayoffMatrix,
    catalog,
    make_bimatrix,
    net_payoff,
    payoffs,
    weak_selection,
)
from .linprog import LinearProgram, LpOutcome, solve_lp
from .market import (
    OnePeriodMarket,
    Portfolio,
    StatePriceVector,
    find_arbitrage,
    find_state_price_vector,
    trivial_outcome_check,
)
from .moran import (
    CriticalSizes,
    FixationVector,
    TwoByTwoPayoff,
    critical_sizes,
    fixation_probabilities,
    relative_fitness,
    weak_selection_fixation,
    weak_selection_scan,
)
from .multiplayer import (
    NPlayerTwoStrategyGame,
    ReductionResult,
    extend_to_n,
    is_reducible,
    n_catalog,
    n_player_classify,
    propagation_check,
)
from .nash import (
    ComparisonReport,
    EquilibriumProfile,
    mixed_nash_support_enumeration,
    nash_vs_insuperable,
    pure_nash,
)
from .sim import (
    MoranEstimate,
    TournamentTrace,
    UltimatumConfig,
    moran_monte_carlo,
    survivors_within_fair_bounds,
    ultimatum_tournament,
)

__all__ = [name for name in dir() if not name.startswith("_")]
