import random
from fractions import Fraction as F

import pytest

from insuperable.classify import classify
from insuperable.errors import DimensionError, DomainError
from insuperable.multiplayer import (
    NPlayerTwoStrategyGame,
    dump_nplayer,
    extend_to_n,
    is_reducible,
    load_nplayer,
    make_reducible_3,
    n_catalog,
    n_player_classify,
    pgg,
    propagation_check,
    zerinho_modified,
    zerinho_n,
    zerinho_original,
)


def rand_affine_game(rng, n_players, span=6, den=3):
    def affine_vector():
        base = F(rng.randint(-span, span), rng.randint(1, den))
        slope = F(rng.randint(-span, span), rng.randint(1, den))
        return tuple(base + slope * k for k in range(n_players))

    return NPlayerTwoStrategyGame(n_players, affine_vector(), affine_vector())


def test_vector_length_validation():
    with pytest.raises(DimensionError):
        NPlayerTwoStrategyGame(3, (1, 2), (1, 2, 3))
    with pytest.raises(DomainError):
        NPlayerTwoStrategyGame(1, (1,), (1,))


def test_pgg_exact_vectors():
    g = pgg(3, 5)
    assert g.a == (F(-2, 5), F(1, 5), F(4, 5), F(7, 5), F(2))
    assert g.b == (F(0), F(3, 5), F(6, 5), F(9, 5), F(12, 5))


def test_pgg_diagonal_gap_is_one():
    g = pgg(F(7, 2), 6)
    assert all(g.a[k] == g.b[k + 1] - 1 for k in range(5))


def test_pgg_classification():
    for r, n in [(F(1, 2), 3), (3, 5), (5, 5), (9, 4)]:
        cls = n_player_classify(pgg(r, n))
        assert cls.B_insuperable and not cls.A_insuperable
        assert cls.A_dominates == (r >= n)
        assert cls.B_dominates == (r <= n)


def test_zerinho_original_all_false():
    cls = n_player_classify(zerinho_original())
    assert not (cls.A_insuperable or cls.B_insuperable or cls.A_dominates or cls.B_dominates)
    assert not is_reducible(zerinho_original()).reducible


def test_zerinho_modified_reduces_to_coordination():
    result = is_reducible(zerinho_modified(F(3, 2)))
    assert result.reducible
    assert result.two_player.A == ((F(3, 2), F(0)), (F(0), F(3, 2)))


def test_zerinho_n_vectors():
    g = zerinho_n(2, 5)
    assert g.a == (F(0), F(2), F(4), F(6), F(8))
    assert g.b == (F(8), F(6), F(4), F(2), F(0))


def test_pgg_reduction_matrix():
    for r, n in [(3, 5), (F(7, 2), 4), (6, 3)]:
        result = is_reducible(pgg(r, n))
        assert result.reducible
        r = F(r)
        assert result.two_player.A == (
            (r - 1, r / n - 1),
            ((n - 1) * r / n, F(0)),
        )


def test_round_trip_random_reducible():
    rng = random.Random(53)
    for _ in range(200):
        n_players = rng.randint(2, 9)
        g = rand_affine_game(rng, n_players)
        result = is_reducible(g)
        assert result.reducible
        assert extend_to_n(result.two_player, n_players) == g


def test_extension_formula():
    coord = is_reducible(zerinho_modified(1)).two_player
    ext = extend_to_n(coord, 4)
    assert ext.a == (F(0), F(1, 3), F(2, 3), F(1))
    assert ext.b == (F(1), F(2, 3), F(1, 3), F(0))
    # N=2 is the identity mapping
    two = extend_to_n(coord, 2)
    assert two.a == (F(0), F(1)) and two.b == (F(1), F(0))


def test_positive_scaling_leaves_flags():
    rng = random.Random(59)
    for _ in range(100):
        n_players = rng.randint(2, 6)
        g = NPlayerTwoStrategyGame(
            n_players,
            tuple(F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n_players)),
            tuple(F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n_players)),
        )
        lam = F(rng.randint(1, 8), rng.randint(1, 4))
        assert n_player_classify(g) == n_player_classify(g.scaled(lam))


def test_dominance_preserved_by_reduction():
    rng = random.Random(61)
    for _ in range(150):
        g = rand_affine_game(rng, rng.randint(2, 7))
        cls = n_player_classify(g)
        two = is_reducible(g).two_player
        (a1, a0), (b1, b0) = two.A
        # A dominates in the reduced 2x2 iff both column comparisons hold
        assert cls.A_dominates == (a1 >= b1 and a0 >= b0)
        assert cls.B_dominates == (b1 >= a1 and b0 >= a0)


def test_make_reducible_3():
    forced = make_reducible_3(zerinho_original())
    assert is_reducible(forced).reducible
    assert forced.a[0] == 0 and forced.b[2] == 0
    with pytest.raises(DomainError):
        make_reducible_3(pgg(2, 4))


def test_propagation_golden_example():
    # reducible game built from the symmetric 2x2 (1,3,2,4) read as the
    # reduced-form matrix [[a1,a0],[b1,b0]] = [[1,3],[2,4]]
    g3 = extend_to_n(
        is_reducible(NPlayerTwoStrategyGame(2, (3, 1), (4, 2))).two_player, 3
    )
    rep = propagation_check(g3)
    assert rep.applicable
    assert g3.a[1] == (g3.a[0] + g3.a[2]) / 2
    assert rep.reduced_A_insuperable


def test_propagation_inapplicable_for_pgg():
    rep = propagation_check(pgg(3, 3))
    assert not rep.applicable


def test_propagation_property_random():
    rng = random.Random(67)
    count = 0
    while count < 200:
        a0 = F(rng.randint(-4, 8), rng.randint(1, 3))
        a2 = a0 - F(rng.randint(0, 6), rng.randint(1, 3))  # a2 <= a0
        a1 = (a0 + a2) / 2
        lo, hi = a2, a1
        if hi < lo:
            continue
        b2 = lo + (hi - lo) * F(rng.randint(0, 4), 4)
        b0 = 2 * a0 - b2 - F(rng.randint(0, 5), rng.randint(1, 2))
        b1 = (b0 + b2) / 2
        if b1 > a0:
            continue
        g3 = NPlayerTwoStrategyGame(3, (a0, a1, a2), (b0, b1, b2))
        cls = n_player_classify(g3)
        if not (cls.A_insuperable and g3.b[2] >= g3.a[2]):
            continue
        count += 1
        rep = propagation_check(g3)
        assert rep.applicable
        assert all(holds for _, _, _, holds in rep.inequalities)
        assert rep.reduced_A_insuperable
        # and the reduced game really leaves A unbeaten per the 2-player test
        report = classify(is_reducible(g3).two_player)
        assert report.a_insuperable is not None


def test_n_catalog_dispatch():
    assert n_catalog("pgg", r=2, N=4) == pgg(2, 4)
    assert n_catalog("zerinho_original") == zerinho_original()
    with pytest.raises(DomainError):
        n_catalog("mystery")
    with pytest.raises(DomainError):
        n_catalog("pgg", r=0, N=4)
    with pytest.raises(DomainError):
        n_catalog("zerinho_modified", alpha=-1)


def test_json_round_trip():
    g = pgg(F(7, 3), 6)
    assert load_nplayer(dump_nplayer(g)) == g
