"""Small exact simplex solver over rationals.

Dense two-phase tableau simplex with Bland's pivoting rule; with exact
arithmetic this terminates without any perturbation machinery.  The public
interface speaks `fractions.Fraction`; internally the tableau runs on
`gmpy2.mpq` when available (identical semantics, much faster) and falls
back to Fraction otherwise.

Maximization convention throughout.  Certificates: for an optimal outcome
the dual vector u (one entry per constraint row) satisfies, exactly,

    u_i >= 0 for "<=" rows, u_i <= 0 for ">=" rows, u_i free for "=" rows,
    sum_i u_i * A[i][j] >= objective[j]  (with equality for free variables),
    u . rhs == optimal value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DimensionError
from .exact import dot, frac_matrix, frac_vector

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _rat = Fraction

LE, EQ, GE = "<=", "=", ">="
NONNEG, FREE = "nonneg", "free"

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """maximize objective . x subject to row senses and variable bounds."""

    objective: tuple[Fraction, ...]
    constraint_matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    senses: tuple[str, ...]
    bounds: Optional[tuple[str, ...]] = None  # default: all nonnegative

    def __post_init__(self):
        object.__setattr__(self, "objective", frac_vector(self.objective))
        object.__setattr__(
            self, "constraint_matrix", tuple(frac_vector(r) for r in self.constraint_matrix)
        )
        object.__setattr__(self, "rhs", frac_vector(self.rhs))
        object.__setattr__(self, "senses", tuple(self.senses))
        nvars = len(self.objective)
        if len(self.constraint_matrix) != len(self.rhs) or len(self.rhs) != len(self.senses):
            raise DimensionError("constraint matrix, rhs and senses must have equal row counts")
        for row in self.constraint_matrix:
            if len(row) != nvars:
                raise DimensionError(f"constraint row width {len(row)} != {nvars} variables")
        for s in self.senses:
            if s not in (LE, EQ, GE):
                raise DimensionError(f"unknown sense {s!r}")
        if self.bounds is None:
            object.__setattr__(self, "bounds", (NONNEG,) * nvars)
        else:
            object.__setattr__(self, "bounds", tuple(self.bounds))
            if len(self.bounds) != nvars:
                raise DimensionError("bounds length must match variable count")
            for b in self.bounds:
                if b not in (NONNEG, FREE):
                    raise DimensionError(f"unknown bound {b!r}")


@dataclass(frozen=True)
class LpOutcome:
    status: str
    optimal_value: Optional[Fraction] = None
    solution: Optional[tuple[Fraction, ...]] = None
    certificate: Optional[tuple[Fraction, ...]] = None  # dual solution when optimal


def solve_lp(lp: LinearProgram) -> LpOutcome:
    nvars = len(lp.objective)
    nrows = len(lp.rhs)
    zero, one = _rat(0), _rat(1)

    # structural columns; free variables split into a positive and negative part
    col_plus = [0] * nvars
    col_minus: list[Optional[int]] = [None] * nvars
    ncols = 0
    for j in range(nvars):
        col_plus[j] = ncols
        ncols += 1
        if lp.bounds[j] == FREE:
            col_minus[j] = ncols
            ncols += 1

    # normalized rows: coefficients over structural columns, rhs >= 0 where possible
    rows = []  # (coeffs, rhs, sense, sign, orig_index)
    for i in range(nrows):
        coeffs = [zero] * ncols
        for j, a in enumerate(lp.constraint_matrix[i]):
            if a:
                q = _rat(a.numerator, a.denominator)
                coeffs[col_plus[j]] = q
                if col_minus[j] is not None:
                    coeffs[col_minus[j]] = -q
        b = _rat(lp.rhs[i].numerator, lp.rhs[i].denominator)
        sense, sign = lp.senses[i], 1
        flip = b < 0 or (sense == GE and b == 0)
        if flip:
            coeffs = [-v for v in coeffs]
            b = -b
            sign = -1
            if sense != EQ:
                sense = LE if sense == GE else GE
        rows.append((coeffs, b, sense, sign, i))

    # slack / surplus / artificial columns and the initial basis
    slack_col = {}
    art_col = {}
    tableau = []
    basis = []
    row_meta = []  # (sense, sign, orig_index)
    extra = []  # deferred unit-column assignments: (row, col, coeff)
    for r, (coeffs, b, sense, sign, orig) in enumerate(rows):
        if sense == LE:
            slack_col[r] = ncols
            extra.append((r, ncols, one))
            ncols += 1
        elif sense == GE:
            slack_col[r] = ncols
            extra.append((r, ncols, -one))
            ncols += 1
        tableau.append(coeffs + [b])
        row_meta.append((sense, sign, orig))
    first_art = ncols
    for r, (coeffs, b, sense, sign, orig) in enumerate(rows):
        if sense != LE:
            art_col[r] = ncols
            extra.append((r, ncols, one))
            ncols += 1
    for row in tableau:
        row[-1:-1] = [zero] * (ncols - (len(row) - 1))
    for r, c, v in extra:
        tableau[r][c] = v
    for r in range(len(tableau)):
        basis.append(art_col.get(r, slack_col.get(r)))

    eligible = [True] * ncols

    def run_simplex(z_row, z_val):
        while True:
            enter = -1
            for j in range(ncols):
                if eligible[j] and z_row[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL, z_val
            leave = -1
            best = None
            best_var = None
            for i in range(len(tableau)):
                a = tableau[i][enter]
                if a > 0:
                    ratio = tableau[i][-1] / a
                    if best is None or ratio < best or (ratio == best and basis[i] < best_var):
                        best, best_var, leave = ratio, basis[i], i
            if leave < 0:
                return UNBOUNDED, None
            # pivot on (leave, enter)
            prow = tableau[leave]
            piv = prow[enter]
            if piv != 1:
                prow = [v / piv for v in prow]
                tableau[leave] = prow
            for i in range(len(tableau)):
                if i != leave:
                    f = tableau[i][enter]
                    if f:
                        row = tableau[i]
                        tableau[i] = [a - f * b for a, b in zip(row, prow)]
            f = z_row[enter]
            if f:
                for j in range(ncols):
                    z_row[j] -= f * prow[j]
                z_val += f * prow[-1]
            basis[leave] = enter

    # phase 1: drive the artificial variables to zero
    if art_col:
        z_row = [zero] * ncols
        z_val = zero
        for r in range(len(tableau)):
            if basis[r] >= first_art:  # artificial basis, phase-1 cost -1
                row = tableau[r]
                for j in range(ncols):
                    z_row[j] += row[j]
                z_val -= row[-1]
        for c in art_col.values():
            z_row[c] = zero
        status, z_val = run_simplex(z_row, z_val)
        if status != OPTIMAL:
            raise AssertionError("phase-1 objective is bounded; simplex reported otherwise")
        if z_val != 0:
            return LpOutcome(status=INFEASIBLE)
        # pivot remaining basic artificials out; drop redundant rows
        r = 0
        while r < len(tableau):
            if basis[r] >= first_art:
                enter = next(
                    (j for j in range(first_art) if tableau[r][j] != 0),
                    None,
                )
                if enter is None:
                    tableau.pop(r)
                    basis.pop(r)
                    row_meta.pop(r)
                    continue
                prow = tableau[r]
                piv = prow[enter]
                prow = [v / piv for v in prow]
                tableau[r] = prow
                for i in range(len(tableau)):
                    if i != r:
                        f = tableau[i][enter]
                        if f:
                            row = tableau[i]
                            tableau[i] = [a - f * b for a, b in zip(row, prow)]
                basis[r] = enter
            r += 1
        for c in art_col.values():
            eligible[c] = False

    # phase 2: the real objective over structural columns
    cost = [zero] * ncols
    for j in range(nvars):
        c = lp.objective[j]
        if c:
            q = _rat(c.numerator, c.denominator)
            cost[col_plus[j]] = q
            if col_minus[j] is not None:
                cost[col_minus[j]] = -q
    z_row = list(cost)
    z_val = zero
    for i in range(len(tableau)):
        cb = cost[basis[i]]
        if cb:
            row = tableau[i]
            for j in range(ncols):
                z_row[j] -= cb * row[j]
            z_val += cb * row[-1]
    status, _ = run_simplex(z_row, z_val)
    if status == UNBOUNDED:
        return LpOutcome(status=UNBOUNDED)

    # primal solution in the original variables
    std_value = {}
    for i in range(len(tableau)):
        std_value[basis[i]] = tableau[i][-1]
    solution = []
    for j in range(nvars):
        v = std_value.get(col_plus[j], zero)
        if col_minus[j] is not None:
            v = v - std_value.get(col_minus[j], zero)
        solution.append(_to_fraction(v))
    solution = tuple(solution)
    value = dot(lp.objective, solution)

    # dual values read off the final reduced costs of each row's unit column
    # (slack_col / art_col are keyed by the original constraint index; rows
    # deleted as redundant keep a zero dual, which stays feasible)
    duals = [Fraction(0)] * nrows
    for sense, sign, orig in row_meta:
        if sense == LE:
            u = -z_row[slack_col[orig]]
        elif sense == GE:
            u = z_row[slack_col[orig]]
        else:
            u = -z_row[art_col[orig]]
        duals[orig] = _to_fraction(u if sign == 1 else -u)

    return LpOutcome(
        status=OPTIMAL,
        optimal_value=value,
        solution=solution,
        certificate=tuple(duals),
    )


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(int(v.numerator), int(v.denominator))


def build_lp(objective, matrix, rhs, senses, bounds=None) -> LinearProgram:
    """Convenience constructor coercing plain numbers to exact rationals."""
    return LinearProgram(
        frac_vector(objective),
        frac_matrix(matrix) if matrix else (),
        frac_vector(rhs),
        tuple(senses),
        tuple(bounds) if bounds is not None else None,
    )
