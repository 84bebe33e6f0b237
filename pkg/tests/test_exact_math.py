import random
from fractions import Fraction

import pytest

from homdual.errors import InputError
from homdual.exact_math import Matrix, mat_kernel, mat_rref, rat, rat_str


def test_rat_accepts_ints_fractions_strings():
    assert rat(3) == Fraction(3)
    assert rat(Fraction(2, 5)) == Fraction(2, 5)
    assert rat("7") == Fraction(7)
    assert rat("-4/6") == Fraction(-2, 3)
    assert rat(" 1/2 ") == Fraction(1, 2)


def test_rat_rejects_floats_and_garbage():
    for bad in (1.5, "1.5", "x", "", "1/0", None, "3/", [1]):
        with pytest.raises(InputError):
            rat(bad)


def test_rat_str_canonical():
    assert rat_str(Fraction(4, 2)) == "2"
    assert rat_str(Fraction(-3, 9)) == "-1/3"
    assert rat_str("5/10") == "1/2"


def test_matrix_basic_ops():
    m = Matrix([[1, 2], [3, 4]])
    assert m[(0, 1)] == 2
    assert m.row(1) == [3, 4]
    assert m.col(0) == [1, 3]
    assert m.transpose() == Matrix([[1, 3], [2, 4]])
    assert m.mul(Matrix.identity(2)) == m
    assert m.apply([1, 1]) == [3, 7]
    assert Matrix.identity(3).is_identity()
    assert not m.is_identity()
    assert m.is_invertible()
    assert not Matrix([[1, 2], [2, 4]]).is_invertible()


def test_matrix_shape_errors():
    with pytest.raises(InputError):
        Matrix([[1, 2], [3]])
    with pytest.raises(InputError):
        Matrix([], cols=None)
    with pytest.raises(InputError):
        Matrix([[1, 2]]).mul(Matrix([[1, 2]]))
    with pytest.raises(InputError):
        Matrix([[1, 2]]).apply([1])


def test_matrix_immutable():
    m = Matrix([[1]])
    with pytest.raises(AttributeError):
        m.rows = 2


def test_rref_identity():
    red, pivots = mat_rref(Matrix.identity(2))
    assert red == Matrix.identity(2)
    assert pivots == [0, 1]


def test_rref_rank_one():
    red, pivots = mat_rref(Matrix([[2, 4], [1, 2]]))
    assert red == Matrix([[1, 2], [0, 0]])
    assert pivots == [0]


def test_rref_zero():
    red, pivots = mat_rref(Matrix.zeros(3, 3))
    assert red == Matrix.zeros(3, 3)
    assert pivots == []


def test_kernel_identity_empty():
    assert mat_kernel(Matrix.identity(4)) == []


def test_kernel_line():
    basis = mat_kernel(Matrix([[1, 1]]))
    assert len(basis) == 1
    v = basis[0]
    assert v.col(0) == [Fraction(-1), Fraction(1)]


def test_kernel_full():
    basis = mat_kernel(Matrix.zeros(2, 3))
    assert len(basis) == 3


def test_rank_nullity_and_exact_kernel():
    rng = random.Random(20260815)
    for _ in range(60):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = Matrix(
            [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)],
            cols=cols,
        )
        _, pivots = mat_rref(m)
        basis = mat_kernel(m)
        assert len(pivots) + len(basis) == cols
        for v in basis:
            image = m.mul(v)
            assert all(image[(i, 0)] == 0 for i in range(rows))
