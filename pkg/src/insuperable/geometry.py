"""Exact vertex enumeration for small polytopes by active-set inspection.

A vertex of {z : E z = f, G z >= h} is a feasible point where the active
constraints have full rank.  For the dimensions used here (capped at 8)
it is fine to try every subset of inequality rows that completes the
equality system to a square one, solve it exactly, and keep the feasible
unique solutions.
"""

from __future__ import annotations

from itertools import combinations

from .errors import CapExceeded
from .exact import dot, gauss_solve


def polytope_vertices(num_vars, equalities, inequalities, cap=8):
    """All vertices of {z in R^num_vars : E z = f, G z >= h}, deduplicated.

    `equalities` and `inequalities` are sequences of (row, rhs) pairs.
    The polytope is assumed bounded; unbounded inputs simply yield the
    vertices of the feasible set's pointed part.
    """
    if num_vars > cap:
        raise CapExceeded(f"vertex enumeration capped at dimension {cap}, got {num_vars}")
    eq_rows = [list(r) + [b] for r, b in equalities]
    pivots = _reduce(eq_rows, num_vars)
    if pivots is None:
        return []
    base_rank = len(pivots)
    need = num_vars - base_rank
    independent_eqs = [(tuple(row[:num_vars]), row[num_vars]) for row in eq_rows[:base_rank]]

    seen = set()
    vertices = []
    ineqs = list(inequalities)
    for active in combinations(range(len(ineqs)), need):
        rows = [r for r, _ in independent_eqs] + [ineqs[k][0] for k in active]
        rhs = [b for _, b in independent_eqs] + [ineqs[k][1] for k in active]
        status, point = gauss_solve(rows, rhs)
        if status != "unique":
            continue
        if any(dot(row, point) < b for row, b in ineqs):
            continue
        if point not in seen:
            seen.add(point)
            vertices.append(point)
    return vertices


def _reduce(rows, width):
    """In-place row reduction; returns pivot columns or None if inconsistent."""
    pivots = []
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][width] != 0:
            return None
    return pivots
