"""Two-player normal-form games over exact rationals.

Conventions: the row player ("A") has n pure strategies and payoff matrix
``A`` of shape n x m; the opponent ("B") has m pure strategies and payoff
matrix ``B`` of shape m x n, so ``B[j][i]`` is B's payoff when A plays i
and B plays j.  The net payoff matrix ``L = A^T - B`` (shape m x n) is the
object every insuperability question reduces to: ``y^T L x`` equals B's
payoff minus A's payoff at the profile (x, y).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DimensionError, DomainError
from .exact import (
    ONE,
    ZERO,
    as_fraction,
    dot,
    format_fraction,
    frac_matrix,
    frac_vector,
    transpose,
)


@dataclass(frozen=True)
class MixedStrategy:
    """A point of the probability simplex with exact rational weights."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", frac_vector(self.weights))
        if not self.weights:
            raise DimensionError("a mixed strategy needs at least one weight")
        if any(w < 0 for w in self.weights):
            raise DomainError("mixed strategy weights must be nonnegative")
        if sum(self.weights) != 1:
            raise DomainError("mixed strategy weights must sum to exactly 1")

    @staticmethod
    def pure(index: int, size: int) -> "MixedStrategy":
        if not 0 <= index < size:
            raise DimensionError(f"pure strategy index {index} out of range({size})")
        return MixedStrategy(tuple(ONE if i == index else ZERO for i in range(size)))

    @staticmethod
    def uniform(size: int) -> "MixedStrategy":
        return MixedStrategy(tuple(Fraction(1, size) for _ in range(size)))

    def __len__(self) -> int:
        return len(self.weights)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    def pure_index(self) -> Optional[int]:
        """Index of the pure strategy, or None if genuinely mixed."""
        sup = self.support()
        return sup[0] if len(sup) == 1 else None

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(w) for w in self.weights)


@dataclass(frozen=True)
class BimatrixGame:
    A: tuple[tuple[Fraction, ...], ...]
    B: tuple[tuple[Fraction, ...], ...]
    labels_a: Optional[tuple[str, ...]] = None
    labels_b: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "A", frac_matrix(self.A))
        object.__setattr__(self, "B", frac_matrix(self.B))
        if not self.A or not self.B:
            raise DimensionError("payoff matrices must be nonempty")
        n, m = len(self.A), len(self.A[0])
        if len(self.B) != m or len(self.B[0]) != n:
            raise DimensionError(
                f"B must be {m}x{n} when A is {n}x{m}; got {len(self.B)}x{len(self.B[0])}"
            )
        if self.labels_a is not None:
            object.__setattr__(self, "labels_a", tuple(self.labels_a))
            if len(self.labels_a) != n:
                raise DimensionError("labels_a length must match A's rows")
        if self.labels_b is not None:
            object.__setattr__(self, "labels_b", tuple(self.labels_b))
            if len(self.labels_b) != m:
                raise DimensionError("labels_b length must match B's rows")

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def m(self) -> int:
        return len(self.A[0])

    @property
    def is_symmetric(self) -> bool:
        return self.n == self.m and self.A == self.B


@dataclass(frozen=True)
class NetPayoffMatrix:
    """L = A^T - B, shape m x n."""

    L: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "L", frac_matrix(self.L))
        if not self.L:
            raise DimensionError("net payoff matrix must be nonempty")

    @property
    def m(self) -> int:
        return len(self.L)

    @property
    def n(self) -> int:
        return len(self.L[0])


def make_bimatrix(a_rows, b_rows, labels_a=None, labels_b=None) -> BimatrixGame:
    return BimatrixGame(frac_matrix(a_rows), frac_matrix(b_rows), labels_a, labels_b)


def net_payoff(game: BimatrixGame) -> NetPayoffMatrix:
    at = transpose(game.A)
    rows = tuple(
        tuple(at[j][i] - game.B[j][i] for i in range(game.n)) for j in range(game.m)
    )
    return NetPayoffMatrix(rows)


def payoffs(game: BimatrixGame, x: MixedStrategy, y: MixedStrategy):
    """Exact expected payoffs (A's, B's) at the profile (x, y)."""
    if len(x) != game.n:
        raise DimensionError(f"x has {len(x)} weights, player A has {game.n} strategies")
    if len(y) != game.m:
        raise DimensionError(f"y has {len(y)} weights, player B has {game.m} strategies")
    pay_a = sum((x.weights[i] * dot(game.A[i], y.weights) for i in range(game.n)), ZERO)
    pay_b = sum((y.weights[j] * dot(game.B[j], x.weights) for j in range(game.m)), ZERO)
    return pay_a, pay_b


def weak_selection(game: BimatrixGame, population: int) -> BimatrixGame:
    """Entries 1 + g/N: baseline fitness plus vanishing selection strength."""
    if population < 1:
        raise DomainError(f"population must be >= 1, got {population}")
    n = Fraction(population)
    return BimatrixGame(
        tuple(tuple(1 + v / n for v in row) for row in game.A),
        tuple(tuple(1 + v / n for v in row) for row in game.B),
        game.labels_a,
        game.labels_b,
    )


# --------------------------------------------------------------------------
# catalog of worked example games
# --------------------------------------------------------------------------


def _hawk_dove(G, C) -> BimatrixGame:
    G, C = as_fraction(G), as_fraction(C)
    if G <= 0:
        raise DomainError(f"hawk_dove requires G > 0, got G={G}")
    a = ((G - C) / 2, G), (ZERO, G / 2)
    return BimatrixGame(a, a, ("hawk", "dove"), ("hawk", "dove"))


def _symmetric_2x2(a, b, c, d) -> BimatrixGame:
    rows = frac_matrix([[a, b], [c, d]])
    return BimatrixGame(rows, rows)


def _three_strategy_cycle() -> BimatrixGame:
    rows = frac_matrix([[1, 1, 4], [2, 1, 1], [3, 2, 5]])
    return BimatrixGame(rows, rows)


def _only_b_insuperable() -> BimatrixGame:
    # realizes the net matrix [[1,-10],[-10,1]] with B's payoffs all zero
    a = frac_matrix([[1, -10], [-10, 1]])
    b = frac_matrix([[0, 0], [0, 0]])
    return BimatrixGame(a, b)


def _chain_store() -> BimatrixGame:
    a = frac_matrix([[5, 2], [5, 0]])
    b = frac_matrix([[1, 1], [2, 0]])
    return BimatrixGame(a, b, ("cooperate", "dispute"), ("out", "in"))


def _ultimatum(M) -> BimatrixGame:
    """Donor offers m in 0..M; receiver accepts offers >= threshold.

    The receiver's strategy set includes ">= M+1" (always reject), so the
    donor matrix is (M+1) x (M+2) and the receiver matrix its mirror.
    """
    M = as_fraction(M)
    if M.denominator != 1 or M < 1:
        raise DomainError(f"ultimatum requires an integer M >= 1, got {M}")
    M = int(M)
    donor = tuple(
        tuple(Fraction(M - m) if m >= t else ZERO for t in range(M + 2))
        for m in range(M + 1)
    )
    receiver = tuple(
        tuple(Fraction(m) if m >= t else ZERO for m in range(M + 1))
        for t in range(M + 2)
    )
    offer_labels = tuple(str(m) for m in range(M + 1))
    threshold_labels = tuple(f">={t}" for t in range(M + 2))
    return BimatrixGame(donor, receiver, offer_labels, threshold_labels)


_CATALOG = {
    "hawk_dove": _hawk_dove,
    "symmetric_2x2": _symmetric_2x2,
    "three_strategy_cycle": _three_strategy_cycle,
    "only_b_insuperable": _only_b_insuperable,
    "chain_store": _chain_store,
    "ultimatum": _ultimatum,
}


def catalog(name: str, **params) -> BimatrixGame:
    """Build a named example game; see `catalog_names()` for the registry.

    ``catalog("weak_selection", base=game, N=13)`` applies the 1 + g/N
    transform to an existing game.
    """
    if name == "weak_selection":
        base = params.pop("base")
        population = params.pop("N")
        if params:
            raise DomainError(f"unexpected parameters {sorted(params)} for weak_selection")
        return weak_selection(base, int(population))
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise DomainError(f"unknown catalog game {name!r}; known: {catalog_names()}") from None
    return builder(**params)


def catalog_names() -> tuple[str, ...]:
    return tuple(sorted(_CATALOG)) + ("weak_selection",)


# --------------------------------------------------------------------------
# JSON wire format: {"A": [[...]], "B": [[...]], "labels_A": [...], "labels_B": [...]}
# with rationals serialized as "p/q" strings (integers may be bare numbers)
# --------------------------------------------------------------------------


def matrix_to_jsonable(rows) -> list:
    return [[_entry_to_jsonable(v) for v in row] for row in rows]


def vector_to_jsonable(values) -> list:
    return [_entry_to_jsonable(v) for v in values]


def _entry_to_jsonable(v):
    v = as_fraction(v)
    if v.denominator == 1:
        return v.numerator
    return format_fraction(v)


def game_to_dict(game: BimatrixGame) -> dict:
    out = {"A": matrix_to_jsonable(game.A), "B": matrix_to_jsonable(game.B)}
    if game.labels_a is not None:
        out["labels_A"] = list(game.labels_a)
    if game.labels_b is not None:
        out["labels_B"] = list(game.labels_b)
    return out


def game_from_dict(data: dict) -> BimatrixGame:
    try:
        a, b = data["A"], data["B"]
    except KeyError as exc:
        raise DimensionError(f"game JSON is missing key {exc}") from None
    return make_bimatrix(a, b, data.get("labels_A"), data.get("labels_B"))


def dump_game(game: BimatrixGame) -> str:
    return json.dumps(game_to_dict(game), indent=2)


def load_game(text: str) -> BimatrixGame:
    return game_from_dict(json.loads(text, parse_float=Fraction))
