from fractions import Fraction
from random import Random

import pytest

from cycdaha.linalg import (
    Matrix,
    algebra_closure_dim,
    matrix_rank,
    nullspace,
    rational_eigenvalues,
    row_echelon,
    span_closure,
)
from cycdaha.scalars import CycloField


def test_rank_and_nullspace_rational():
    rows = [
        [Fraction(1), Fraction(2), Fraction(3)],
        [Fraction(2), Fraction(4), Fraction(6)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    assert matrix_rank(rows, 3) == 2
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    v = basis[0]
    for row in rows:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_nullspace_over_cyclotomic_field():
    dom = CycloField(3)
    z = dom.zeta
    rows = [[dom.one, z], [z ** 2, dom.one]]  # second row = z^2 * first
    basis = nullspace(rows, 2, field_one=dom.one)
    assert len(basis) == 1
    v = basis[0]
    assert rows[0][0] * v[0] + rows[0][1] * v[1] == dom.zero


def test_row_echelon_deterministic():
    rng = Random(3)
    rows = [[Fraction(rng.randint(-5, 5)) for _ in range(4)] for _ in range(6)]
    r1 = row_echelon([list(r) for r in rows], 4)
    r2 = row_echelon([list(r) for r in rows], 4)
    assert r1 == r2


def test_matrix_inverse_and_det():
    m = Matrix([[1, 2], [3, 5]])
    assert m.det() == -1
    inv = m.inverse()
    assert m * inv == Matrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_char_poly_and_rational_eigenvalues():
    m = Matrix([[2, 0], [1, 3]])
    # det(xI - A) = (x-2)(x-3) = 6 - 5x + x^2
    assert m.char_poly() == [Fraction(6), Fraction(-5), Fraction(1)]
    assert sorted(rational_eigenvalues(m)) == [2, 3]
    n = Matrix([[0, 1], [1, 0]])
    assert sorted(rational_eigenvalues(n)) == [-1, 1]
    # no rational eigenvalues
    r = Matrix([[0, -1], [1, 0]])
    assert rational_eigenvalues(r) == []


def test_solve_right():
    m = Matrix([[1, 0], [1, 1], [0, 1]])
    rhs = m * Matrix([[2], [3]])
    x = m.solve_right(rhs)
    assert x == Matrix([[2], [3]])
    with pytest.raises(ValueError):
        m.solve_right(Matrix([[1], [0], [1]]))


def test_left_kernel_and_stack():
    m = Matrix([[1, 2], [2, 4], [0, 1]])
    lk = m.left_kernel_matrix()
    assert lk.m == 1
    assert (lk * m).is_zero()
    assert m.hstack(m).shape == (3, 4)
    assert m.vstack(m).shape == (6, 2)


def test_span_closure():
    op = Matrix([[0, 1], [0, 0]])
    v = Matrix.column([0, 1])
    closure = span_closure([v], [op])
    assert len(closure) == 2  # v and op v span everything
    w = Matrix.column([1, 0])
    assert len(span_closure([w], [op])) == 1  # invariant line


def test_algebra_closure_dim():
    # two generic matrices generate all of M_2
    a = Matrix([[1, 2], [0, 1]])
    b = Matrix([[1, 0], [3, 1]])
    assert algebra_closure_dim([a, b]) == 4
    # simultaneously diagonal matrices generate a 2-dim algebra
    d1 = Matrix([[1, 0], [0, 2]])
    d2 = Matrix([[3, 0], [0, 5]])
    assert algebra_closure_dim([d1, d2]) == 2


def test_zero_dimensional_shapes():
    z = Matrix.zero(0, 3)
    assert z.shape == (0, 3)
    assert z.T.shape == (3, 0)
    assert (Matrix.zero(2, 0) * Matrix.zero(0, 3)).shape == (2, 3)
    assert Matrix.zero(2, 0).rank() == 0
