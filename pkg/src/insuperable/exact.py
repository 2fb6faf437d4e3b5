"""Exact rational parsing, formatting, and small dense linear algebra.

Every quantity in this package is a `fractions.Fraction`; nothing is ever
rounded.  Floats are accepted at the boundary but are converted through
their shortest decimal representation (``0.1`` becomes ``1/10``, not the
binary value), because downstream sign tests (``>= 0`` vs ``> 0``) decide
classifications and must not be corrupted by binary noise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    """Coerce ints, strings ("3", "7/2", "0.25") and floats to exact rationals.

    Floats go through ``repr`` so the decimal the caller wrote is parsed
    exactly instead of the underlying binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    # gmpy2.mpq and friends expose numerator/denominator
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is not None and den is not None:
        return Fraction(int(num), int(den))
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def format_fraction(q: Fraction) -> str:
    """Render as "p/q", or plain "p" for integers."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def frac_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_fraction(v) for v in values)


def frac_matrix(rows: Iterable[Iterable]) -> tuple[tuple[Fraction, ...], ...]:
    out = tuple(frac_vector(row) for row in rows)
    if out:
        width = len(out[0])
        if any(len(row) != width for row in out):
            raise DimensionError("matrix rows have unequal lengths")
        if width == 0:
            raise DimensionError("matrix rows must be nonempty")
    return out


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot: lengths {len(u)} and {len(v)} differ")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def mat_vec(m: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(dot(row, x) for row in m)


def vec_mat(y: Sequence[Fraction], m: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    if m and len(y) != len(m):
        raise DimensionError(f"vec_mat: vector length {len(y)} vs {len(m)} rows")
    width = len(m[0]) if m else 0
    return tuple(sum((y[i] * m[i][j] for i in range(len(m))), ZERO) for j in range(width))


def transpose(m: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    if not m:
        return ()
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def gauss_solve(matrix, rhs):
    """Solve a square-or-not exact linear system by Gaussian elimination.

    Returns ``(status, solution)`` where status is "unique", "inconsistent"
    or "underdetermined"; the solution is a tuple only in the unique case.
    """
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    if len(rows) != len(rhs):
        raise DimensionError("gauss_solve: matrix/rhs row mismatch")
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            return "inconsistent", None
    if len(pivots) < ncols:
        return "underdetermined", None
    solution = [ZERO] * ncols
    for i, c in enumerate(pivots):
        solution[c] = rows[i][ncols]
    return "unique", tuple(solution)
