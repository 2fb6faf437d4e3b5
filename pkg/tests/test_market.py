import random
from fractions import Fraction as F

import pytest

from insuperable.errors import DomainError
from insuperable.exact import dot
from insuperable.market import (
    OnePeriodMarket,
    Portfolio,
    StatePriceVector,
    dump_market,
    find_arbitrage,
    find_state_price_vector,
    load_market,
    trivial_outcome_check,
)


def verify_state_prices(market, spv):
    assert all(v > 0 for v in spv.pi)
    for i in range(market.assets):
        assert dot(market.D[i], spv.pi) == market.p[i]


def verify_arbitrage(market, portfolio, kind):
    payoff = portfolio.payoff_vector(market)
    cost = portfolio.cost(market)
    assert all(v >= 0 for v in payoff)
    if kind == "negative_cost_no_downside":
        assert cost < 0
    else:
        assert kind == "gain_at_zero_cost"
        assert cost <= 0
        assert sum(payoff) > 0


def test_state_price_vector_examples():
    mkt = OnePeriodMarket([[1, 1]], [1])
    spv = find_state_price_vector(mkt)
    assert spv.pi == (F(1, 2), F(1, 2))  # the max-min choice
    verify_state_prices(mkt, spv)

    assert find_state_price_vector(OnePeriodMarket([[1, 2]], [-1])) is None

    identity = OnePeriodMarket([[1, 0], [0, 1]], [1, 1])
    assert find_state_price_vector(identity).pi == (F(1), F(1))


def test_arbitrage_examples():
    mkt = OnePeriodMarket([[1, 2]], [-1])
    found = find_arbitrage(mkt)
    assert found is not None
    theta, kind = found
    assert kind == "negative_cost_no_downside" and theta.theta == (F(1),)
    verify_arbitrage(mkt, theta, kind)

    # identically paying assets at different prices: no arbitrage on the cone
    assert find_arbitrage(OnePeriodMarket([[1, 1], [1, 1]], [1, 2])) is None
    assert find_arbitrage(OnePeriodMarket([[1, 0], [0, 1]], [1, 1])) is None


def test_arbitrage_zero_cost_gain_kind():
    # cost is exactly zero but one state can pay: type (i), not type (ii)
    mkt = OnePeriodMarket([[1, 0], [0, 1]], [0, 1])
    found = find_arbitrage(mkt)
    assert found is not None and found[1] == "gain_at_zero_cost"
    verify_arbitrage(mkt, *found)


def test_trivial_outcome_examples():
    rep = trivial_outcome_check(OnePeriodMarket([[1, -1], [-1, 1]], [0, 0]))
    assert rep.value_sign == "zero"
    assert rep.all_insuperable_trivial and rep.verdict_no_arbitrage

    rep2 = trivial_outcome_check(OnePeriodMarket([[1, 2]], [-1]))
    assert rep2.value_sign == "positive"
    assert not rep2.no_strict_insuperable
    assert not rep2.all_insuperable_trivial and not rep2.verdict_no_arbitrage

    rep3 = trivial_outcome_check(OnePeriodMarket([[0, 0], [0, 0]], [0, 0]))
    assert rep3.all_insuperable_trivial and rep3.verdict_no_arbitrage


def test_unstructured_price_probe():
    # all outcomes trivial, yet buying the zero-cash-flow asset at a negative
    # price is an arbitrage: the bare triviality criterion needs the price side
    probe = OnePeriodMarket([[0]], [-1])
    rep = trivial_outcome_check(probe)
    assert rep.all_insuperable_trivial
    assert not rep.no_negative_cost_insuperable
    assert not rep.verdict_no_arbitrage
    assert find_arbitrage(probe) is not None


def test_portfolio_cone_validation():
    with pytest.raises(DomainError):
        Portfolio((F(1), F(-1)))
    with pytest.raises(DomainError):
        StatePriceVector((F(1), F(0)))


def test_routes_agree_random_markets():
    rng = random.Random(71)
    for _ in range(250):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        d = tuple(tuple(F(rng.randint(-2, 2)) for _ in range(n)) for _ in range(m))
        p = tuple(F(rng.randint(-2, 2)) for _ in range(m))
        market = OnePeriodMarket(d, p)
        found = find_arbitrage(market)
        report = trivial_outcome_check(market)
        assert (found is None) == report.verdict_no_arbitrage, market
        if found is not None:
            verify_arbitrage(market, *found)


def test_structured_prices_match_triviality_theorem():
    # p = -D y for y >= 0: the verdict must coincide with all-trivial
    rng = random.Random(73)
    for _ in range(200):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        d = tuple(tuple(F(rng.randint(-2, 2)) for _ in range(n)) for _ in range(m))
        y = tuple(F(rng.randint(0, 3), rng.randint(1, 2)) for _ in range(n))
        p = tuple(-dot(row, y) for row in d)
        market = OnePeriodMarket(d, p)
        report = trivial_outcome_check(market)
        assert report.verdict_no_arbitrage == report.all_insuperable_trivial, market
        assert (find_arbitrage(market) is None) == report.all_insuperable_trivial, market


def test_state_prices_certify_unconstrained_no_arbitrage():
    rng = random.Random(79)
    for _ in range(150):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        d = tuple(tuple(F(rng.randint(-2, 2)) for _ in range(n)) for _ in range(m))
        pi = tuple(F(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(n))
        p = tuple(dot(row, pi) for row in d)
        market = OnePeriodMarket(d, p)
        spv = find_state_price_vector(market)
        assert spv is not None
        verify_state_prices(market, spv)
        # positive state prices also kill conical arbitrage
        assert find_arbitrage(market) is None
        assert trivial_outcome_check(market).verdict_no_arbitrage


def test_json_round_trip():
    market = OnePeriodMarket([[1, F(-1, 2)]], [F(3, 4)])
    assert load_market(dump_market(market)) == market
