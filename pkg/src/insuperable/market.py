"""One-period conical market model: state prices, arbitrage, trivial outcomes.

A market has cash-flow matrix D (m assets x n states) and price vector p
(length m).  Portfolios are restricted to the cone theta >= 0 (no short
selling).  Viewed as a game, the trader mixes over assets and the payoff
vector of a normalized portfolio is theta^T D, one entry per state; the
trader's insuperable strategies are therefore exactly the no-downside
portfolios {theta in simplex : theta^T D >= 0}, and a trivial outcome
means theta^T D = 0.

Two independent routes to the no-arbitrage verdict are provided:
`find_arbitrage` searches the arbitrage definition directly with LPs, while
`trivial_outcome_check` reasons through the insuperable set (game value,
per-state triviality LPs, and exact vertex enumeration for the price-side
conditions).  The two must agree on every market.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .classify import NEGATIVE, POSITIVE, ZERO_SIGN, zero_sum_value
from .errors import DimensionError, DomainError
from .exact import ONE, ZERO, dot, frac_matrix, frac_vector, transpose, vec_mat
from .games import matrix_to_jsonable, vector_to_jsonable
from .geometry import polytope_vertices
from .linprog import EQ, FREE, GE, LE, LinearProgram, solve_lp

GAIN_AT_ZERO_COST = "gain_at_zero_cost"
NEGATIVE_COST_NO_DOWNSIDE = "negative_cost_no_downside"


@dataclass(frozen=True)
class OnePeriodMarket:
    D: tuple[tuple[Fraction, ...], ...]  # m assets x n states
    p: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "D", frac_matrix(self.D))
        object.__setattr__(self, "p", frac_vector(self.p))
        if not self.D:
            raise DimensionError("cash flow matrix must be nonempty")
        if len(self.p) != len(self.D):
            raise DimensionError(
                f"price vector length {len(self.p)} != {len(self.D)} assets"
            )

    @property
    def assets(self) -> int:
        return len(self.D)

    @property
    def states(self) -> int:
        return len(self.D[0])


@dataclass(frozen=True)
class Portfolio:
    theta: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "theta", frac_vector(self.theta))
        if any(t < 0 for t in self.theta):
            raise DomainError("portfolios live on the cone theta >= 0")

    def payoff_vector(self, market: OnePeriodMarket) -> tuple[Fraction, ...]:
        return vec_mat(self.theta, market.D)

    def cost(self, market: OnePeriodMarket) -> Fraction:
        return dot(self.theta, market.p)


@dataclass(frozen=True)
class StatePriceVector:
    pi: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "pi", frac_vector(self.pi))
        if any(v <= 0 for v in self.pi):
            raise DomainError("state price vectors must be strictly positive")


@dataclass(frozen=True)
class TrivialOutcomeReport:
    value_sign: str
    no_strict_insuperable: bool
    all_insuperable_trivial: bool
    # price-side conditions (logged separately; automatic for structured p)
    no_negative_cost_insuperable: bool
    no_zero_cost_nontrivial: bool
    verdict_no_arbitrage: bool


def find_state_price_vector(market: OnePeriodMarket) -> Optional[StatePriceVector]:
    """Max-min positive solution of D pi = p, or None.

    Maximizes the smallest component of pi subject to D pi = p (capped at 1
    so the program stays bounded when D has a positive kernel direction);
    a strictly positive optimum certifies the unconstrained-market absence
    of arbitrage.
    """
    m, n = market.assets, market.states
    # variables: pi_1..pi_n (free), t (free); maximize t
    matrix = []
    rhs = []
    senses = []
    for i in range(m):
        matrix.append(tuple(market.D[i]) + (ZERO,))
        rhs.append(market.p[i])
        senses.append(EQ)
    for j in range(n):
        row = [ZERO] * (n + 1)
        row[j] = ONE
        row[n] = -ONE
        matrix.append(tuple(row))
        rhs.append(ZERO)
        senses.append(GE)
    matrix.append((ZERO,) * n + (ONE,))
    rhs.append(ONE)
    senses.append(LE)
    lp = LinearProgram(
        objective=(ZERO,) * n + (ONE,),
        constraint_matrix=tuple(matrix),
        rhs=tuple(rhs),
        senses=tuple(senses),
        bounds=(FREE,) * (n + 1),
    )
    outcome = solve_lp(lp)
    if outcome.status != "optimal" or outcome.optimal_value <= 0:
        return None
    return StatePriceVector(outcome.solution[:n])


def _insuperable_polytope(market: OnePeriodMarket):
    """Equalities/inequalities of {theta in simplex : theta^T D >= 0}."""
    m = market.assets
    eqs = [((ONE,) * m, ONE)]
    ineqs = [
        (tuple(ONE if i == k else ZERO for i in range(m)), ZERO) for k in range(m)
    ]
    for col in transpose(market.D):
        ineqs.append((tuple(col), ZERO))
    return eqs, ineqs


def find_arbitrage(market: OnePeriodMarket):
    """Search the cone for an arbitrage portfolio, normalized to sum 1.

    Returns (Portfolio, kind) or None.  An immediate-profit portfolio
    (negative cost, no downside) is reported in preference to a
    zero-cost-possible-gain one.
    """
    m, n = market.assets, market.states
    cols = transpose(market.D)
    no_downside = [tuple(col) for col in cols]  # theta^T D >= 0, per state
    simplex_row = (ONE,) * m

    # (ii) minimize cost subject to no downside
    lp_cost = LinearProgram(
        objective=tuple(-v for v in market.p),
        constraint_matrix=tuple(no_downside) + (simplex_row,),
        rhs=(ZERO,) * n + (ONE,),
        senses=(GE,) * n + (EQ,),
    )
    outcome = solve_lp(lp_cost)
    if outcome.status == "optimal" and outcome.optimal_value > 0:
        return Portfolio(outcome.solution), NEGATIVE_COST_NO_DOWNSIDE

    # (i) maximize total payoff subject to no downside and cost <= 0
    total_payoff = tuple(sum(row, ZERO) for row in market.D)
    lp_gain = LinearProgram(
        objective=total_payoff,
        constraint_matrix=tuple(no_downside) + (tuple(market.p), simplex_row),
        rhs=(ZERO,) * n + (ZERO, ONE),
        senses=(GE,) * n + (LE, EQ),
    )
    outcome = solve_lp(lp_gain)
    if outcome.status == "optimal" and outcome.optimal_value > 0:
        return Portfolio(outcome.solution), GAIN_AT_ZERO_COST
    return None


def trivial_outcome_check(market: OnePeriodMarket, cap: int = 12) -> TrivialOutcomeReport:
    """No-arbitrage verdict derived from the insuperable-strategy structure.

    The game value of the trader side gives the sign trichotomy; when it is
    zero, per-state LPs decide whether every insuperable portfolio has a
    trivial outcome.  The two price-side conditions (no insuperable
    portfolio with negative cost; no nontrivial one at nonpositive cost)
    are evaluated on the exact vertices of the insuperable polytope, an
    entirely different mechanism from the LP search in `find_arbitrage`.
    For structured prices p = -D y (y >= 0) they hold automatically and the
    verdict coincides with `all_insuperable_trivial`.
    """
    m, n = market.assets, market.states
    result = zero_sum_value(transpose(market.D))
    v = result.value
    value_sign = POSITIVE if v > 0 else (NEGATIVE if v < 0 else ZERO_SIGN)
    no_strict = v <= 0

    eqs, ineqs = _insuperable_polytope(market)
    if v < 0:
        all_trivial = True  # vacuous: no insuperable portfolio at all
    elif v > 0:
        all_trivial = False  # the strict witness has a nontrivial outcome
    else:
        all_trivial = True
        cols = transpose(market.D)
        for j in range(n):
            lp = LinearProgram(
                objective=tuple(cols[j]),
                constraint_matrix=tuple(r for r, _ in ineqs[m:]) + ((ONE,) * m,),
                rhs=(ZERO,) * n + (ONE,),
                senses=(GE,) * n + (EQ,),
            )
            outcome = solve_lp(lp)
            if outcome.status == "optimal" and outcome.optimal_value > 0:
                all_trivial = False
                break

    if v < 0:
        no_negative_cost = True
        no_zero_cost_nontrivial = True
    else:
        vertices = polytope_vertices(m, eqs, ineqs, cap=cap)
        no_negative_cost = all(dot(vtx, market.p) >= 0 for vtx in vertices)
        # type-(i) arbitrage lives in S intersect {p . theta <= 0}; the total
        # payoff is linear, so its maximum over that polytope sits at a vertex
        restricted = polytope_vertices(
            m, eqs, ineqs + [(tuple(-q for q in market.p), ZERO)], cap=cap
        )
        totals = _total(market)
        no_zero_cost_nontrivial = all(dot(vtx, totals) <= 0 for vtx in restricted)
    verdict = no_negative_cost and no_zero_cost_nontrivial
    return TrivialOutcomeReport(
        value_sign=value_sign,
        no_strict_insuperable=no_strict,
        all_insuperable_trivial=all_trivial,
        no_negative_cost_insuperable=no_negative_cost,
        no_zero_cost_nontrivial=no_zero_cost_nontrivial,
        verdict_no_arbitrage=verdict,
    )


def _total(market: OnePeriodMarket):
    return tuple(sum(row, ZERO) for row in market.D)


# JSON wire format: {"D": [[...]], "p": [...]} with "p/q" rationals


def market_to_dict(market: OnePeriodMarket) -> dict:
    return {"D": matrix_to_jsonable(market.D), "p": vector_to_jsonable(market.p)}


def market_from_dict(data: dict) -> OnePeriodMarket:
    try:
        return OnePeriodMarket(frac_matrix(data["D"]), frac_vector(data["p"]))
    except KeyError as exc:
        raise DimensionError(f"market JSON is missing key {exc}") from None


def load_market(text: str) -> OnePeriodMarket:
    return market_from_dict(json.loads(text, parse_float=Fraction))


def dump_market(market: OnePeriodMarket) -> str:
    return json.dumps(market_to_dict(market), indent=2)
