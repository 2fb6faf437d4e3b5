"""Nash equilibrium enumeration for bimatrix games.

Pure profiles are checked directly; mixed ones come from exact support
enumeration (solve the indifference system on each support pair, keep the
solutions on the simplex that survive the best-response test).  Singular
indifference systems are handled by enumerating the vertices of the
solution polytope and flagging the resulting profiles as degenerate, which
yields representative equilibria rather than whole components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .classify import InsuperableReport, NOT_INSUPERABLE, check_insuperable, classify
from .errors import CapExceeded
from .exact import ONE, ZERO, dot, gauss_solve
from .games import BimatrixGame, MixedStrategy, payoffs
from .geometry import polytope_vertices

PURE, MIXED = "pure", "mixed"


@dataclass(frozen=True)
class EquilibriumProfile:
    x: MixedStrategy
    y: MixedStrategy
    payoff_a: Fraction
    payoff_b: Fraction
    kind: str
    strict: bool
    degenerate: bool = False


@dataclass(frozen=True)
class ComparisonReport:
    equilibria: tuple[EquilibriumProfile, ...]
    insuperable: InsuperableReport
    nash_x_insuperable: tuple[bool, ...]
    nash_y_insuperable: tuple[bool, ...]
    any_nash_strategy_insuperable: bool
    witness_x_is_nash: Optional[bool]
    witness_y_is_nash: Optional[bool]


def _best_response_holds(game: BimatrixGame, x: MixedStrategy, y: MixedStrategy):
    """Exact best-response test; returns (ok, strict_for_both)."""
    pay_a, pay_b = payoffs(game, x, y)
    strict = True
    sup_x, sup_y = set(x.support()), set(y.support())
    for i in range(game.n):
        rival = dot(game.A[i], y.weights)
        if rival > pay_a:
            return False, False
        if i not in sup_x and rival == pay_a:
            strict = False
    for j in range(game.m):
        rival = dot(game.B[j], x.weights)
        if rival > pay_b:
            return False, False
        if j not in sup_y and rival == pay_b:
            strict = False
    if len(sup_x) > 1 or len(sup_y) > 1:
        strict = False
    return True, strict


def _profile(game, x, y, degenerate=False) -> EquilibriumProfile:
    pay_a, pay_b = payoffs(game, x, y)
    kind = PURE if x.pure_index() is not None and y.pure_index() is not None else MIXED
    _, strict = _best_response_holds(game, x, y)
    return EquilibriumProfile(x, y, pay_a, pay_b, kind, strict, degenerate)


def pure_nash(game: BimatrixGame) -> list[EquilibriumProfile]:
    """All pure equilibria by exhaustive exact best-response checking."""
    found = []
    for i in range(game.n):
        for j in range(game.m):
            x = MixedStrategy.pure(i, game.n)
            y = MixedStrategy.pure(j, game.m)
            ok, _ = _best_response_holds(game, x, y)
            if ok:
                found.append(_profile(game, x, y))
    return found


def _support_solutions(payoff_rows, own_support, opp_support):
    """Solve the indifference system for the opponent mix on a support pair.

    Unknowns: the opponent weights on `opp_support` plus the common payoff.
    Returns ("unique", [weights]) or ("degenerate", vertices) or ("none", []).
    """
    k = len(opp_support)
    rows = []
    rhs = []
    for i in own_support:
        rows.append([payoff_rows[i][j] for j in opp_support] + [-ONE])
        rhs.append(ZERO)
    rows.append([ONE] * k + [ZERO])
    rhs.append(ONE)
    status, solution = gauss_solve(rows, rhs)
    if status == "unique":
        weights = solution[:k]
        if any(w < 0 for w in weights):
            return "none", []
        return "unique", [weights]
    if status == "inconsistent":
        return "none", []
    # singular but consistent: enumerate the vertices of the solution set
    eqs = [(tuple(r), b) for r, b in zip(rows, rhs)]
    ineqs = [
        (tuple(ONE if t == j else ZERO for t in range(k + 1)), ZERO) for j in range(k)
    ]
    vertices = polytope_vertices(k + 1, eqs, ineqs, cap=k + 1)
    return "degenerate", [v[:k] for v in vertices]


def _embed(weights, support, size) -> Optional[MixedStrategy]:
    full = [ZERO] * size
    for w, idx in zip(weights, support):
        full[idx] = w
    if any(v < 0 for v in full) or sum(full) != 1:
        return None
    return MixedStrategy(tuple(full))


def mixed_nash_support_enumeration(game: BimatrixGame, cap: int = 6) -> list[EquilibriumProfile]:
    """All equilibria found by exact support enumeration, deduplicated.

    Complete for nondegenerate games; degenerate support systems contribute
    the vertices of their solution sets, flagged `degenerate`.
    """
    if game.n > cap or game.m > cap:
        raise CapExceeded(f"support enumeration capped at {cap}, game is {game.n}x{game.m}")
    found: dict = {}
    for k in range(1, min(game.n, game.m) + 1):
        for sup_x in combinations(range(game.n), k):
            for sup_y in combinations(range(game.m), k):
                # y must make A's support rows indifferent; x must do the
                # same for B's support rows (B is indexed [j][i] already)
                status_y, y_solutions = _support_solutions(game.A, sup_x, sup_y)
                if status_y == "none":
                    continue
                status_x, x_solutions = _support_solutions(game.B, sup_y, sup_x)
                if status_x == "none":
                    continue
                degenerate = "degenerate" in (status_x, status_y)
                for yw in y_solutions:
                    y = _embed(yw, sup_y, game.m)
                    if y is None:
                        continue
                    for xw in x_solutions:
                        x = _embed(xw, sup_x, game.n)
                        if x is None:
                            continue
                        ok, _ = _best_response_holds(game, x, y)
                        if not ok:
                            continue
                        key = (x.weights, y.weights)
                        known = found.get(key)
                        if known is None:
                            found[key] = _profile(game, x, y, degenerate)
                        elif degenerate and not known.degenerate:
                            # the same profile reappearing through a singular
                            # system is what marks the game as degenerate
                            found[key] = _profile(game, x, y, True)
    return list(found.values())


def nash_vs_insuperable(game: BimatrixGame, cap: int = 6) -> ComparisonReport:
    """Pair the equilibrium list with the insuperability report."""
    equilibria = tuple(mixed_nash_support_enumeration(game, cap=cap))
    report = classify(game)
    x_flags = tuple(
        check_insuperable(game, "A", eq.x) != NOT_INSUPERABLE for eq in equilibria
    )
    y_flags = tuple(
        check_insuperable(game, "B", eq.y) != NOT_INSUPERABLE for eq in equilibria
    )
    witness_x_is_nash = None
    if report.a_insuperable is not None:
        witness_x_is_nash = any(eq.x == report.a_insuperable for eq in equilibria)
    witness_y_is_nash = None
    if report.b_insuperable is not None:
        witness_y_is_nash = any(eq.y == report.b_insuperable for eq in equilibria)
    return ComparisonReport(
        equilibria=equilibria,
        insuperable=report,
        nash_x_insuperable=x_flags,
        nash_y_insuperable=y_flags,
        any_nash_strategy_insuperable=any(x_flags) or any(y_flags),
        witness_x_is_nash=witness_x_is_nash,
        witness_y_is_nash=witness_y_is_nash,
    )
