import random
from fractions import Fraction as F

import pytest

from insuperable.errors import DimensionError, DomainError
from insuperable.exact import transpose
from insuperable.games import (
    MixedStrategy,
    catalog,
    dump_game,
    load_game,
    make_bimatrix,
    net_payoff,
    payoffs,
    weak_selection,
)


def rand_fraction(rng, span=4, den=4):
    return F(rng.randint(-span, span), rng.randint(1, den))


def rand_matrix(rng, rows, cols):
    return tuple(tuple(rand_fraction(rng) for _ in range(cols)) for _ in range(rows))


def rand_simplex(rng, k):
    cuts = sorted(rng.randint(0, 24) for _ in range(k - 1))
    parts = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(24 - prev)
    return MixedStrategy(tuple(F(p, 24) for p in parts))


def test_make_bimatrix_symmetric_flag():
    a = [[2, 5], [4, 8]]
    game = make_bimatrix(a, a)
    assert game.is_symmetric
    assert not make_bimatrix(a, [[2, 4], [5, 8]]).is_symmetric


def test_make_bimatrix_degenerate_1x1():
    game = make_bimatrix([[0]], [[0]])
    assert game.n == game.m == 1


def test_make_bimatrix_shape_error():
    with pytest.raises(DimensionError):
        make_bimatrix([[1, 2], [3, 4]], [[1, 2], [3, 4], [5, 6]])


def test_mixed_strategy_validation():
    with pytest.raises(DomainError):
        MixedStrategy((F(1, 2), F(1, 3)))
    with pytest.raises(DomainError):
        MixedStrategy((F(3, 2), F(-1, 2)))
    assert MixedStrategy.pure(1, 3).support() == (1,)
    assert MixedStrategy.uniform(4).weights == (F(1, 4),) * 4


def test_net_payoff_hawk_dove():
    game = catalog("hawk_dove", G=3, C=10)
    assert net_payoff(game).L == ((F(0), F(-3)), (F(3), F(0)))


def test_net_payoff_chain_store():
    assert net_payoff(catalog("chain_store")).L == ((F(4), F(4)), (F(0), F(0)))


def test_net_payoff_matches_definition_random():
    rng = random.Random(11)
    for _ in range(200):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        a, b = rand_matrix(rng, n, m), rand_matrix(rng, m, n)
        game = make_bimatrix(a, b)
        at = transpose(a)
        expect = tuple(
            tuple(at[j][i] - b[j][i] for i in range(n)) for j in range(m)
        )
        assert net_payoff(game).L == expect


def test_symmetric_games_have_antisymmetric_net():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 4)
        a = rand_matrix(rng, n, n)
        L = net_payoff(make_bimatrix(a, a)).L
        assert all(L[i][j] == -L[j][i] for i in range(n) for j in range(n))


def test_payoff_difference_identity():
    # y^T L x = x^T A y - y^T B x: the row player's edge over the opponent
    rng = random.Random(7)
    for _ in range(100):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        game = make_bimatrix(rand_matrix(rng, n, m), rand_matrix(rng, m, n))
        x, y = rand_simplex(rng, n), rand_simplex(rng, m)
        pay_a, pay_b = payoffs(game, x, y)
        L = net_payoff(game).L
        ylx = sum(
            y.weights[j] * L[j][i] * x.weights[i] for j in range(m) for i in range(n)
        )
        assert pay_a - pay_b == ylx


def test_cycle_tie_payoffs():
    game = catalog("three_strategy_cycle")
    star = MixedStrategy.uniform(3)
    for i, expect in [(0, F(2)), (1, F(4, 3)), (2, F(10, 3))]:
        pa, pb = payoffs(game, MixedStrategy.pure(i, 3), star)
        assert pa == pb == expect


def test_payoffs_dimension_error():
    game = catalog("hawk_dove", G=1, C=2)
    with pytest.raises(DimensionError):
        payoffs(game, MixedStrategy.uniform(3), MixedStrategy.uniform(2))


def test_catalog_cycle_matrix():
    game = catalog("three_strategy_cycle")
    assert game.A == ((F(1), F(1), F(4)), (F(2), F(1), F(1)), (F(3), F(2), F(5)))
    assert game.is_symmetric


def test_catalog_ultimatum_structure():
    game = catalog("ultimatum", M=4)
    assert game.n == 5 and game.m == 6
    # diagonal splits (4,0), (3,1), ..., (0,4) when the offer is accepted
    for m in range(5):
        assert game.A[m][m] == 4 - m
        assert game.B[m][m] == m
        assert game.A[m][m + 1] == 0  # threshold just above the offer: rejected
    assert all(game.B[5][m] == 0 for m in range(5))  # always-reject column


def test_catalog_weak_selection():
    base = catalog("hawk_dove", G=3, C=10)
    weak = catalog("weak_selection", base=base, N=13)
    assert weak.A[0][0] == 1 + F(-7, 2) / 13
    assert weak.A[1][0] == 1
    assert weak_selection(base, 13) == weak


def test_catalog_errors():
    with pytest.raises(DomainError):
        catalog("nope")
    with pytest.raises(DomainError):
        catalog("ultimatum", M=-1)
    with pytest.raises(DomainError):
        catalog("hawk_dove", G=0, C=1)


def test_game_json_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        game = make_bimatrix(rand_matrix(rng, n, m), rand_matrix(rng, m, n))
        assert load_game(dump_game(game)) == game
    labeled = catalog("chain_store")
    assert load_game(dump_game(labeled)) == labeled


def test_game_json_decimal_parsing_is_exact():
    game = load_game('{"A": [[0.1]], "B": [[0.3]]}')
    assert game.A[0][0] == F(1, 10)
    assert game.B[0][0] == F(3, 10)
