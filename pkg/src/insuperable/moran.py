"""Exact frequency-dependent Moran process quantities for symmetric 2x2 games.

Payoffs (a, b, c, d) mean: a = A vs A, b = A vs B, c = B vs A, d = B vs B.
Fitness equals the average payoff of one game against every other member of
the population, so with k A-players among N the relative fitness is

    rho_k = (a(k-1) + b(N-k)) / (ck + d(N-k-1)),        1 <= k <= N-1,

and the fixation probability of i initial A-players is the classic
birth-death path sum with the empty product equal to 1 (this convention is
pinned by the N=2 closed form F_1 = b/(b+c)).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .exact import ONE, ZERO, as_fraction, format_fraction
from .games import BimatrixGame, catalog, weak_selection


@dataclass(frozen=True)
class TwoByTwoPayoff:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    def scaled(self, factor) -> "TwoByTwoPayoff":
        f = as_fraction(factor)
        return TwoByTwoPayoff(self.a * f, self.b * f, self.c * f, self.d * f)

    def as_game(self) -> BimatrixGame:
        rows = ((self.a, self.b), (self.c, self.d))
        return BimatrixGame(rows, rows)

    @staticmethod
    def from_game(game: BimatrixGame) -> "TwoByTwoPayoff":
        if not (game.is_symmetric and game.n == 2):
            raise DomainError("Moran payoffs require a symmetric 2x2 game")
        (a, b), (c, d) = game.A
        return TwoByTwoPayoff(a, b, c, d)


@dataclass(frozen=True)
class FixationVector:
    N: int
    F: tuple[Fraction, ...]  # indexed by initial A-count, F[0]=0, F[N]=1


@dataclass(frozen=True)
class CriticalSizes:
    N_inf: Fraction
    N_sup: Fraction


@dataclass(frozen=True)
class ScanRow:
    N: int
    F1: Optional[Fraction]
    neutral: Fraction
    delta_sign: Optional[int]  # sign of F1 - 1/N; None when the row failed
    error: Optional[str] = None


@dataclass(frozen=True)
class ScanResult:
    rows: tuple[ScanRow, ...]
    crossover: Optional[int]  # largest N with F1 > 1/N before the first sign change


def _fitness_parts(p: TwoByTwoPayoff, k: int, N: int):
    num = p.a * (k - 1) + p.b * (N - k)
    den = p.c * k + p.d * (N - k - 1)
    return num, den


def relative_fitness(p: TwoByTwoPayoff, k: int, N: int) -> Fraction:
    """rho_k, the A-to-B average fitness ratio at A-count k."""
    if N < 2:
        raise DomainError(f"population size must be >= 2, got {N}")
    if not 1 <= k <= N - 1:
        raise DomainError(f"k must satisfy 1 <= k <= N-1, got k={k}, N={N}")
    num, den = _fitness_parts(p, k, N)
    if den == 0:
        raise DomainError(f"relative fitness undefined: ck + d(N-k-1) = 0 at k={k}, N={N}")
    return num / den


def selection_favors(p: TwoByTwoPayoff, k: int, N: int) -> bool:
    """True when rho_k > 1 (the A type is locally favored)."""
    return relative_fitness(p, k, N) > 1


def _fixation_from_inverse_ratios(inv_rho, N: int) -> FixationVector:
    # partial[i] = sum_{j=1..i} prod_{k=1..j-1} rho_k^{-1}
    terms = [ONE]
    for r in inv_rho:
        terms.append(terms[-1] * r)
    partial = [ZERO]
    acc = ZERO
    for t in terms[:N]:
        acc += t
        partial.append(acc)
    total = partial[N]
    F = tuple(partial[i] / total for i in range(N + 1))
    return FixationVector(N=N, F=F)


def fixation_probabilities(p: TwoByTwoPayoff, N: int) -> FixationVector:
    """Exact fixation vector with fitness equal to the average payoff.

    Interior A-fitness must be positive and B-fitness nonnegative; a zero
    B-fitness is legitimate (rho_k^{-1} = 0, the chain never steps down
    through k) and is what makes F_1 = 1 in the hawk-dove game at N=2.
    """
    if N < 2:
        raise DomainError(f"population size must be >= 2, got {N}")
    inv_rho = []
    for k in range(1, N):
        num, den = _fitness_parts(p, k, N)
        if num <= 0 or den < 0:
            raise DomainError(
                f"invalid fitness at k={k}, N={N}: "
                f"a(k-1)+b(N-k)={num} must be > 0 and ck+d(N-k-1)={den} must be >= 0"
            )
        inv_rho.append(den / num)
    return _fixation_from_inverse_ratios(inv_rho, N)


def critical_sizes(p: TwoByTwoPayoff) -> CriticalSizes:
    """Population thresholds from d > b > c > a > 0.

    Below N_inf every initial condition fixates more often than neutral;
    above N_sup, less often (both exact, per the fixation formula).
    """
    checks = [
        ("a > 0 (positive payoffs)", p.a > 0),
        ("c > a (strategy-2 strictly better against strategy-1)", p.c > p.a),
        ("d > b (strategy-2 strictly better against strategy-2)", p.d > p.b),
        ("b > c (strategy-1 strictly insuperable)", p.b > p.c),
    ]
    for name, ok in checks:
        if not ok:
            raise DomainError(f"critical sizes require {name}; payoff=({p.a},{p.b},{p.c},{p.d})")
    first = (p.d - p.a) / (p.d - p.b)
    second = (p.d - p.a) / (p.c - p.a)
    return CriticalSizes(N_inf=min(first, second), N_sup=max(first, second))


CENTERED, ENTRYWISE = "centered", "entrywise"


def weak_selection_fixation(base: TwoByTwoPayoff, N: int, fitness: str = CENTERED) -> FixationVector:
    """Fixation vector under weak selection of strength 1/N.

    "centered" (default): per-capita fitness is the baseline 1 plus the
    payoff excess over the population mean payoff, scaled by 1/N.  This is
    the convention that reproduces the single-mutant crossover N_c = 13 for
    the hawk-dove game with G=3, C=10 (and F_i below neutral for i >= 2 at
    that size).

    "entrywise": fitness is the plain average of the transformed payoff
    entries 1 + g/N.  Second-order equivalent to "centered" for large N but
    with a visibly earlier crossover at small N.
    """
    if fitness == ENTRYWISE:
        payoff = TwoByTwoPayoff.from_game(weak_selection(base.as_game(), N))
        return fixation_probabilities(payoff, N)
    if fitness != CENTERED:
        raise DomainError(f"unknown weak-selection fitness convention {fitness!r}")
    if N < 2:
        raise DomainError(f"population size must be >= 2, got {N}")
    inv_rho = []
    for k in range(1, N):
        num, den = _fitness_parts(base, k, N)
        pay_a = num / Fraction(N - 1)
        pay_b = den / Fraction(N - 1)
        mean = (k * pay_a + (N - k) * pay_b) / Fraction(N)
        fit_a = 1 + (pay_a - mean) / Fraction(N)
        fit_b = 1 + (pay_b - mean) / Fraction(N)
        if fit_a <= 0 or fit_b < 0:
            raise DomainError(
                f"invalid weak-selection fitness at k={k}, N={N}: "
                f"A fitness {fit_a} must be > 0 and B fitness {fit_b} must be >= 0"
            )
        inv_rho.append(fit_b / fit_a)
    return _fixation_from_inverse_ratios(inv_rho, N)


def weak_selection_scan(base: TwoByTwoPayoff, n_max: int, fitness: str = CENTERED) -> ScanResult:
    """Invasion probability of a single mutant vs neutrality, N = 2..n_max.

    The crossover is the last N with F_1 > 1/N before the first sign
    change; rows where the fitness turns non-positive are flagged and the
    scan continues.
    """
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    rows = []
    for n in range(2, n_max + 1):
        neutral = Fraction(1, n)
        try:
            f1 = weak_selection_fixation(base, n, fitness).F[1]
        except DomainError as exc:
            rows.append(ScanRow(N=n, F1=None, neutral=neutral, delta_sign=None, error=str(exc)))
            continue
        delta = f1 - neutral
        sign = 0 if delta == 0 else (1 if delta > 0 else -1)
        rows.append(ScanRow(N=n, F1=f1, neutral=neutral, delta_sign=sign))
    crossover = None
    for row in rows:
        if row.delta_sign is None:
            continue
        if row.delta_sign > 0:
            crossover = row.N
        else:
            break
    return ScanResult(rows=tuple(rows), crossover=crossover)


def scan_to_csv(result: ScanResult) -> str:
    """Columns N,F1,neutral,delta_sign with exact and decimal renderings."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["N", "F1", "F1_decimal", "neutral", "neutral_decimal", "delta_sign"])
    for row in result.rows:
        if row.F1 is None:
            writer.writerow([row.N, "", "", format_fraction(row.neutral),
                             repr(float(row.neutral)), ""])
        else:
            writer.writerow([
                row.N,
                format_fraction(row.F1),
                repr(float(row.F1)),
                format_fraction(row.neutral),
                repr(float(row.neutral)),
                row.delta_sign,
            ])
    return out.getvalue()


def fixation_to_csv(vec: FixationVector) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["i", "F", "F_decimal"])
    for i, f in enumerate(vec.F):
        writer.writerow([i, format_fraction(f), repr(float(f))])
    return out.getvalue()


def hawk_dove_payoff(G, C) -> TwoByTwoPayoff:
    return TwoByTwoPayoff.from_game(catalog("hawk_dove", G=G, C=C))
