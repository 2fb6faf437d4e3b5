from fractions import Fraction as F

import pytest

from insuperable.errors import CapExceeded
from insuperable.exact import ONE, ZERO
from insuperable.geometry import polytope_vertices


def simplex_constraints(k):
    eqs = [((ONE,) * k, ONE)]
    ineqs = [(tuple(ONE if i == j else ZERO for i in range(k)), ZERO) for j in range(k)]
    return eqs, ineqs


def test_simplex_vertices():
    eqs, ineqs = simplex_constraints(3)
    verts = sorted(polytope_vertices(3, eqs, ineqs))
    assert verts == [
        (F(0), F(0), F(1)),
        (F(0), F(1), F(0)),
        (F(1), F(0), F(0)),
    ]


def test_halved_square():
    # {x,y in [0,1], x + y >= 1} has vertices (1,0), (0,1), (1,1)
    ineqs = [
        ((ONE, ZERO), ZERO),
        ((ZERO, ONE), ZERO),
        ((-ONE, ZERO), -ONE),
        ((ZERO, -ONE), -ONE),
        ((ONE, ONE), ONE),
    ]
    verts = sorted(polytope_vertices(2, [], ineqs))
    assert verts == [(F(0), F(1)), (F(1), F(0)), (F(1), F(1))]


def test_empty_polytope():
    eqs, ineqs = simplex_constraints(2)
    ineqs.append(((-ONE, -ONE), ONE))  # x + y <= -1: impossible on the simplex
    assert polytope_vertices(2, eqs, ineqs) == []


def test_inconsistent_equalities():
    eqs = [((ONE, ZERO), ZERO), ((ONE, ZERO), ONE)]
    assert polytope_vertices(2, eqs, []) == []


def test_redundant_equalities_are_fine():
    eqs = [((ONE, ONE), ONE), ((F(2), F(2)), F(2))]
    _, ineqs = simplex_constraints(2)
    verts = sorted(polytope_vertices(2, eqs, ineqs))
    assert verts == [(F(0), F(1)), (F(1), F(0))]


def test_cap():
    eqs, ineqs = simplex_constraints(9)
    with pytest.raises(CapExceeded):
        polytope_vertices(9, eqs, ineqs)
