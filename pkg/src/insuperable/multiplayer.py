"""Two-strategy N-player symmetric games: classification and reduction.

Payoff vectors a and b have length N; ``a[k]`` is the payoff of a type-A
player facing k other A's (and N-k-1 B's), ``b[k]`` likewise for type B.
Insuperability compares the -45 degree diagonals of the payoff table
(``a[k]`` against ``b[k+1]``), dominance compares columns (``a[k]`` vs
``b[k]``).

A game is reducible to a two-player game when each payoff is the average
of N-1 pairwise encounters, which holds exactly when both vectors are
affine in k; the reduced symmetric 2x2 matrix is then

    [[a[N-1], a[0]],
     [b[N-1], b[0]]].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DimensionError, DomainError
from .exact import as_fraction, frac_vector
from .games import BimatrixGame, vector_to_jsonable


@dataclass(frozen=True)
class NPlayerTwoStrategyGame:
    N: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        if self.N < 2:
            raise DomainError(f"need at least 2 players, got N={self.N}")
        object.__setattr__(self, "a", frac_vector(self.a))
        object.__setattr__(self, "b", frac_vector(self.b))
        if len(self.a) != self.N or len(self.b) != self.N:
            raise DimensionError(
                f"payoff vectors must have length N={self.N}, got {len(self.a)} and {len(self.b)}"
            )

    def scaled(self, factor) -> "NPlayerTwoStrategyGame":
        f = as_fraction(factor)
        return NPlayerTwoStrategyGame(
            self.N, tuple(v * f for v in self.a), tuple(v * f for v in self.b)
        )


@dataclass(frozen=True)
class NPlayerClassification:
    A_insuperable: bool
    B_insuperable: bool
    A_dominates: bool
    B_dominates: bool
    A_strictly_insuperable: bool
    B_strictly_insuperable: bool
    A_strictly_dominates: bool
    B_strictly_dominates: bool


@dataclass(frozen=True)
class ReductionResult:
    reducible: bool
    two_player: Optional[BimatrixGame] = None


@dataclass(frozen=True)
class PropagationReport:
    applicable: bool
    reason: Optional[str]
    inequalities: tuple[tuple[str, Fraction, Fraction, bool], ...]
    reduced_A_insuperable: Optional[bool]


def n_player_classify(g: NPlayerTwoStrategyGame) -> NPlayerClassification:
    diag = [(g.a[k], g.b[k + 1]) for k in range(g.N - 1)]
    cols = list(zip(g.a, g.b))
    return NPlayerClassification(
        A_insuperable=all(x >= y for x, y in diag),
        B_insuperable=all(x <= y for x, y in diag),
        A_dominates=all(x >= y for x, y in cols),
        B_dominates=all(y >= x for x, y in cols),
        A_strictly_insuperable=all(x > y for x, y in diag),
        B_strictly_insuperable=all(x < y for x, y in diag),
        A_strictly_dominates=all(x > y for x, y in cols),
        B_strictly_dominates=all(y > x for x, y in cols),
    )


def _is_affine(values) -> bool:
    return all(
        values[k + 1] - 2 * values[k] + values[k - 1] == 0
        for k in range(1, len(values) - 1)
    )


def reduced_matrix(g: NPlayerTwoStrategyGame) -> BimatrixGame:
    rows = ((g.a[g.N - 1], g.a[0]), (g.b[g.N - 1], g.b[0]))
    return BimatrixGame(rows, rows, ("A", "B"), ("A", "B"))


def is_reducible(g: NPlayerTwoStrategyGame) -> ReductionResult:
    """Exact second-difference test; N=2 games are trivially reducible."""
    if g.N == 2 or (_is_affine(g.a) and _is_affine(g.b)):
        return ReductionResult(reducible=True, two_player=reduced_matrix(g))
    return ReductionResult(reducible=False)


def extend_to_n(two: BimatrixGame, N: int) -> NPlayerTwoStrategyGame:
    """Average-of-pairwise-rounds extension of a symmetric 2x2 game.

    a[k] = [k*a1 + (N-k-1)*a0] / (N-1) with (a1, a0) the first matrix row,
    and likewise for b from the second row.
    """
    if not (two.is_symmetric and two.n == 2):
        raise DomainError("extension requires a symmetric 2x2 game")
    if N < 2:
        raise DomainError(f"need at least 2 players, got N={N}")
    (a1, a0), (b1, b0) = two.A
    den = Fraction(N - 1)
    a = tuple((k * a1 + (N - k - 1) * a0) / den for k in range(N))
    b = tuple((k * b1 + (N - k - 1) * b0) / den for k in range(N))
    return NPlayerTwoStrategyGame(N, a, b)


def make_reducible_3(g: NPlayerTwoStrategyGame) -> NPlayerTwoStrategyGame:
    """Replace the homogeneous-population payoffs to force reducibility.

    In payoff-difference comparisons a[N-1] and b[0] are immaterial (they
    describe homogeneous populations), so a three-player game can always be
    made affine by overwriting them.  Off by default everywhere; callers
    opt in explicitly.
    """
    if g.N != 3:
        raise DomainError("the free-extremes adjustment applies to N=3 games only")
    return NPlayerTwoStrategyGame(
        3,
        (g.a[0], g.a[1], 2 * g.a[1] - g.a[0]),
        (2 * g.b[1] - g.b[2], g.b[1], g.b[2]),
    )


def propagation_check(g3: NPlayerTwoStrategyGame) -> PropagationReport:
    """Insuperability propagation from a reducible 3-player game.

    Hypotheses: the game reduces, b[2] >= a[2], and A is insuperable in the
    3-player game.  Conclusion: A stays insuperable in the reduced game,
    through the chain a0 = a[0] >= 2 b[2] - a[2] >= b[2] = b1.
    """
    if g3.N != 3:
        return PropagationReport(False, "requires N=3", (), None)
    reduction = is_reducible(g3)
    if not reduction.reducible:
        return PropagationReport(False, "game is not reducible", (), None)
    cls = n_player_classify(g3)
    if g3.b[2] < g3.a[2]:
        return PropagationReport(False, "hypothesis b[2] >= a[2] fails", (), None)
    if not cls.A_insuperable:
        return PropagationReport(False, "A is not insuperable in the 3-player game", (), None)
    chain = (
        ("b[2] <= a[1]", g3.b[2], g3.a[1], g3.b[2] <= g3.a[1]),
        ("a[1] == (a[0]+a[2])/2", g3.a[1], (g3.a[0] + g3.a[2]) / 2,
         g3.a[1] == (g3.a[0] + g3.a[2]) / 2),
        ("a[0] >= 2 b[2] - a[2]", g3.a[0], 2 * g3.b[2] - g3.a[2],
         g3.a[0] >= 2 * g3.b[2] - g3.a[2]),
        ("2 b[2] - a[2] >= b[2]", 2 * g3.b[2] - g3.a[2], g3.b[2],
         2 * g3.b[2] - g3.a[2] >= g3.b[2]),
    )
    reduced = reduction.two_player
    reduced_ok = reduced.A[0][1] >= reduced.A[1][0]  # a0 >= b1 in the 2x2
    return PropagationReport(True, None, chain, reduced_ok)


# --------------------------------------------------------------------------
# catalog
# --------------------------------------------------------------------------


def pgg(r, N: int) -> NPlayerTwoStrategyGame:
    """Public good game: contributions multiplied by r, split among all N."""
    r = as_fraction(r)
    if r <= 0:
        raise DomainError(f"pgg requires r > 0, got {r}")
    if N < 2:
        raise DomainError(f"pgg requires N >= 2, got {N}")
    a = tuple(Fraction(k + 1) * r / N - 1 for k in range(N))
    b = tuple(Fraction(k) * r / N for k in range(N))
    return NPlayerTwoStrategyGame(N, a, b)


def zerinho_original() -> NPlayerTwoStrategyGame:
    """Three players show zero or one finger; the minority is eliminated."""
    return NPlayerTwoStrategyGame(3, (0, 2, 1), (1, 2, 0))


def zerinho_modified(alpha) -> NPlayerTwoStrategyGame:
    """Pairwise-matching rescoring of zerinho: alpha per matching pair."""
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise DomainError(f"zerinho_modified requires alpha > 0, got {alpha}")
    return NPlayerTwoStrategyGame(3, (0, alpha / 2, alpha), (alpha, alpha / 2, 0))


def zerinho_n(alpha, N: int) -> NPlayerTwoStrategyGame:
    """N-player matching game in unnormalized form: a[k] = k alpha."""
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise DomainError(f"zerinho_n requires alpha > 0, got {alpha}")
    if N < 2:
        raise DomainError(f"zerinho_n requires N >= 2, got {N}")
    a = tuple(Fraction(k) * alpha for k in range(N))
    b = tuple(Fraction(N - 1 - k) * alpha for k in range(N))
    return NPlayerTwoStrategyGame(N, a, b)


_N_CATALOG = {
    "pgg": pgg,
    "zerinho_original": zerinho_original,
    "zerinho_modified": zerinho_modified,
    "zerinho_n": zerinho_n,
}


def n_catalog(name: str, **params) -> NPlayerTwoStrategyGame:
    try:
        builder = _N_CATALOG[name]
    except KeyError:
        raise DomainError(
            f"unknown N-player game {name!r}; known: {sorted(_N_CATALOG)}"
        ) from None
    return builder(**params)


# JSON wire format: {"N": 5, "a": [...], "b": [...]} with "p/q" rationals


def nplayer_to_dict(g: NPlayerTwoStrategyGame) -> dict:
    return {"N": g.N, "a": vector_to_jsonable(g.a), "b": vector_to_jsonable(g.b)}


def nplayer_from_dict(data: dict) -> NPlayerTwoStrategyGame:
    try:
        return NPlayerTwoStrategyGame(int(data["N"]), frac_vector(data["a"]), frac_vector(data["b"]))
    except KeyError as exc:
        raise DimensionError(f"N-player JSON is missing key {exc}") from None


def load_nplayer(text: str) -> NPlayerTwoStrategyGame:
    return nplayer_from_dict(json.loads(text, parse_float=Fraction))


def dump_nplayer(g: NPlayerTwoStrategyGame) -> str:
    return json.dumps(nplayer_to_dict(g), indent=2)
