"""Deciding and constructing insuperable strategies.

A strategy x of the row player is insuperable when L x >= 0 for the net
payoff matrix L = A^T - B: no opponent strategy then yields the opponent a
higher payoff.  Likewise y is insuperable for the opponent when y^T L <= 0.
Everything reduces to the sign of the value v of the zero-sum game on L:

    v > 0   <=>  the row player has a strictly insuperable strategy,
    v = 0   <=>  both players have insuperable strategies (a pair),
    v < 0   <=>  the opponent has a strictly insuperable strategy,

and the maximin / minimax strategies are the witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .errors import CapExceeded, DimensionError
from .exact import ONE, ZERO, frac_matrix, mat_vec, transpose, vec_mat
from .games import BimatrixGame, MixedStrategy, NetPayoffMatrix, net_payoff
from .geometry import polytope_vertices
from .linprog import LE, LinearProgram, solve_lp

NEGATIVE, ZERO_SIGN, POSITIVE = "negative", "zero", "positive"
NOT_INSUPERABLE, INSUPERABLE, STRICTLY_INSUPERABLE = (
    "not_insuperable",
    "insuperable",
    "strictly_insuperable",
)


@dataclass(frozen=True)
class GameValueResult:
    value: Fraction
    maximin_x: MixedStrategy  # L . maximin_x >= value componentwise
    minimax_y: MixedStrategy  # minimax_y^T . L <= value componentwise


@dataclass(frozen=True)
class InsuperableReport:
    value_sign: Optional[str]  # None only from the inconclusive grid oracle
    a_insuperable: Optional[MixedStrategy]
    b_insuperable: Optional[MixedStrategy]
    a_strict: bool
    b_strict: bool
    pair_exists: bool


def _net_rows(source):
    if isinstance(source, BimatrixGame):
        return net_payoff(source).L
    if isinstance(source, NetPayoffMatrix):
        return source.L
    return frac_matrix(source)


def zero_sum_value(net) -> GameValueResult:
    """Exact value and optimal strategies of the zero-sum game on L.

    Solved through the standard bounded reformulation of the value program
    "maximize t s.t. L x >= t 1, sum x = 1, x >= 0": shift L by a constant
    K making every entry >= 1, then a single-phase LP

        maximize sum(w)  s.t.  (L + K)^T w <= 1,  w >= 0

    yields the minimizer as w (normalized) and the maximizer as the exact
    dual vector, both at Bland-pivot-determined vertices.
    """
    rows = _net_rows(net)
    m, n = len(rows), len(rows[0])
    shift = ONE - min(min(row) for row in rows)
    shifted = [[v + shift for v in row] for row in rows]

    # constraint rows are the columns of the shifted matrix
    lp = LinearProgram(
        objective=(ONE,) * m,
        constraint_matrix=tuple(
            tuple(shifted[i][j] for i in range(m)) for j in range(n)
        ),
        rhs=(ONE,) * n,
        senses=(LE,) * n,
    )
    outcome = solve_lp(lp)
    if outcome.status != "optimal":  # cannot happen: feasible at 0, bounded by 1
        raise AssertionError(f"value LP reported {outcome.status}")
    total = outcome.optimal_value
    if total <= 0:
        raise AssertionError("value LP optimum must be positive")
    dual_total = sum(outcome.certificate, ZERO)
    if dual_total != total:
        raise AssertionError("strong duality violated in value LP")
    value = 1 / total - shift
    minimax_y = MixedStrategy(tuple(w / total for w in outcome.solution))
    maximin_x = MixedStrategy(tuple(u / total for u in outcome.certificate))
    return GameValueResult(value=value, maximin_x=maximin_x, minimax_y=minimax_y)


def classify(game: BimatrixGame) -> InsuperableReport:
    """Full trichotomy report for a bimatrix game, with exact witnesses."""
    result = zero_sum_value(net_payoff(game))
    v = result.value
    if v > 0:
        return InsuperableReport(
            value_sign=POSITIVE,
            a_insuperable=result.maximin_x,
            b_insuperable=None,
            a_strict=True,
            b_strict=False,
            pair_exists=False,
        )
    if v < 0:
        return InsuperableReport(
            value_sign=NEGATIVE,
            a_insuperable=None,
            b_insuperable=result.minimax_y,
            a_strict=False,
            b_strict=True,
            pair_exists=False,
        )
    return InsuperableReport(
        value_sign=ZERO_SIGN,
        a_insuperable=result.maximin_x,
        b_insuperable=result.minimax_y,
        a_strict=False,
        b_strict=False,
        pair_exists=True,
    )


def check_insuperable(game: BimatrixGame, player: str, strategy: MixedStrategy) -> str:
    """Exact sign test of L s (player "A") or s^T L (player "B")."""
    rows = net_payoff(game).L
    if player == "A":
        if len(strategy) != game.n:
            raise DimensionError(f"strategy length {len(strategy)} != {game.n}")
        image = mat_vec(rows, strategy.weights)
        if all(v > 0 for v in image):
            return STRICTLY_INSUPERABLE
        if all(v >= 0 for v in image):
            return INSUPERABLE
        return NOT_INSUPERABLE
    if player == "B":
        if len(strategy) != game.m:
            raise DimensionError(f"strategy length {len(strategy)} != {game.m}")
        image = vec_mat(strategy.weights, rows)
        if all(v < 0 for v in image):
            return STRICTLY_INSUPERABLE
        if all(v <= 0 for v in image):
            return INSUPERABLE
        return NOT_INSUPERABLE
    raise DimensionError(f"player must be 'A' or 'B', got {player!r}")


def insuperable_vertices(game: BimatrixGame, player: str, cap: int = 8):
    """All vertices of the insuperable polytope for one player.

    For "A" this is {x in simplex : L x >= 0}; empty exactly when the
    player has no insuperable strategy at all.
    """
    rows = net_payoff(game).L
    if player == "A":
        k = game.n
        extra = rows
    elif player == "B":
        k = game.m
        extra = [[-v for v in row] for row in transpose(rows)]
    else:
        raise DimensionError(f"player must be 'A' or 'B', got {player!r}")
    if k > cap:
        raise CapExceeded(f"dimension {k} above the vertex-enumeration cap {cap}")
    eqs = [((ONE,) * k, ONE)]
    ineqs = [(tuple(ONE if i == j else ZERO for i in range(k)), ZERO) for j in range(k)]
    ineqs += [(tuple(row), ZERO) for row in extra]
    return [MixedStrategy(v) for v in polytope_vertices(k, eqs, ineqs, cap=cap)]


def _simplex_grid(size: int, resolution: int):
    """Integer compositions of `resolution` into `size` parts."""
    if size == 1:
        yield (resolution,)
        return
    for first in range(resolution + 1):
        for rest in _simplex_grid(size - 1, resolution - first):
            yield (first,) + rest


def brute_force_classify(game: BimatrixGame, resolution: int) -> InsuperableReport:
    """Independent grid-scan oracle for `classify`.

    Scans every simplex point with denominator `resolution` on both sides,
    testing the sign conditions directly in integer arithmetic.  Witness
    claims are always sound; `value_sign` is None when the grid is too
    coarse to reach a verdict (both polytopes may be lower-dimensional and
    miss every grid point), and converges to `classify` as the resolution
    grows.
    """
    if game.n > 4 or game.m > 4:
        raise DimensionError("brute force scan supports dimensions up to 4")
    if resolution < 1:
        raise DimensionError("resolution must be >= 1")
    rows = net_payoff(game).L
    scale = lcm(*(v.denominator for row in rows for v in row))
    int_rows = [[int(v * scale) for v in row] for row in rows]
    int_cols = [[int_rows[i][j] for i in range(game.m)] for j in range(game.n)]

    x_found = x_strict = None
    for point in _simplex_grid(game.n, resolution):
        image = [sum(r[j] * point[j] for j in range(game.n)) for r in int_rows]
        if all(v >= 0 for v in image):
            if x_found is None:
                x_found = point
            if all(v > 0 for v in image):
                x_strict = point
                break
    y_found = y_strict = None
    for point in _simplex_grid(game.m, resolution):
        image = [sum(c[i] * point[i] for i in range(game.m)) for c in int_cols]
        if all(v <= 0 for v in image):
            if y_found is None:
                y_found = point
            if all(v < 0 for v in image):
                y_strict = point
                break

    def to_strategy(point):
        if point is None:
            return None
        return MixedStrategy(tuple(Fraction(k, resolution) for k in point))

    if x_found is not None and y_found is not None:
        sign = ZERO_SIGN
    elif x_strict is not None:
        sign = POSITIVE
    elif y_strict is not None:
        sign = NEGATIVE
    else:
        sign = None  # inconclusive at this resolution
    return InsuperableReport(
        value_sign=sign,
        a_insuperable=to_strategy(x_found),
        b_insuperable=to_strategy(y_found),
        a_strict=sign == POSITIVE,
        b_strict=sign == NEGATIVE,
        pair_exists=sign == ZERO_SIGN,
    )
