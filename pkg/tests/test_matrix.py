from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from preeuclid import Matrix, mat_inverse, mat_mul
from preeuclid.errors import FieldMismatchError, ShapeError, SingularMatrixError
from preeuclid.matrix import rank
from preeuclid.scalar import Field, Scalar

from .support import fixture, rows

half = Fraction(1, 2)


def test_identity_is_neutral():
    x = rows([1, 2, 3], [0, -1, "1/3"], [7, 0, 0])
    assert mat_mul(Matrix.identity(3), x) == x
    assert mat_mul(x, Matrix.identity(3)) == x


def test_swap_is_an_involution():
    s = rows([0, 1], [1, 0])
    assert mat_mul(s, s) == Matrix.identity(2)


def test_change_of_basis_product_example():
    spec, change = fixture("real5_basis_change")
    t = change.transition
    new_op = mat_mul(mat_mul(mat_inverse(t), spec.op), t)
    assert new_op.column(0) == tuple(Scalar(v) for v in (4, 0, 0, 0, 2))


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        mat_mul(rows([1, 2]), rows([1, 2]))


def test_field_mismatch():
    a = Matrix.identity(2)
    b = Matrix.identity(2, Field.GAUSSIAN_RATIONAL)
    with pytest.raises(FieldMismatchError):
        mat_mul(a, b)


def test_inverse_of_identity():
    assert mat_inverse(Matrix.identity(4)) == Matrix.identity(4)


def test_inverse_two_by_two():
    a = rows([1, 1], [1, -1])
    expected = rows([half, half], [half, -half])
    # oracle: multiplying back must give the identity on both sides
    assert mat_mul(a, expected) == Matrix.identity(2)
    assert mat_mul(expected, a) == Matrix.identity(2)
    assert mat_inverse(a) == expected


def test_singular_reports_rank():
    with pytest.raises(SingularMatrixError) as info:
        mat_inverse(rows([1, 2], [2, 4]))
    assert info.value.rank == 1 and info.value.size == 2


def test_inverse_requires_square():
    with pytest.raises(ShapeError):
        mat_inverse(rows([1, 2, 3], [4, 5, 6]))


def test_gaussian_inverse():
    g = Field.GAUSSIAN_RATIONAL
    a = Matrix.from_rows([[Scalar(0, 1, g), Scalar(1, 0, g)], [Scalar(2, 0, g), Scalar(0, -3, g)]])
    assert mat_mul(a, mat_inverse(a)) == Matrix.identity(2, g)


def test_rank():
    assert rank(rows([1, 2, 3], [2, 4, 6], [0, 0, 1])) == 2
    assert rank(Matrix.zeros(3, 3)) == 0


def test_entry_count_checked():
    with pytest.raises(ShapeError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(ShapeError):
        Matrix.from_rows([[1, 2], [3]])


def test_uniform_field_tag():
    m = Matrix.from_rows([[1, Scalar(0, 1)], [0, 1]])
    assert m.field is Field.GAUSSIAN_RATIONAL
    assert all(e.field is Field.GAUSSIAN_RATIONAL for e in m.entries)
    with pytest.raises(FieldMismatchError):
        Matrix.from_rows([[1, Scalar(0, 1)]], Field.RATIONAL)


entries = st.fractions(min_value=-9, max_value=9, max_denominator=4)


@st.composite
def square_matrices(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return Matrix(n, n, [draw(entries) for _ in range(n * n)])


@given(square_matrices())
@settings(max_examples=60, deadline=None)
def test_inverse_both_sides_exact(a):
    assume(rank(a) == a.rows)
    inv = mat_inverse(a)
    eye = Matrix.identity(a.rows)
    assert mat_mul(a, inv) == eye
    assert mat_mul(inv, a) == eye


@st.composite
def same_size_triples(draw):
    n = draw(st.integers(1, 4))
    return tuple(Matrix(n, n, [draw(entries) for _ in range(n * n)]) for _ in range(3))


@given(same_size_triples())
@settings(max_examples=40, deadline=None)
def test_product_associative(abc):
    a, b, c = abc
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@given(square_matrices(5), st.data())
@settings(max_examples=40, deadline=None)
def test_singular_matrices_rejected(a, data):
    # overwrite one row with a combination of the others
    n = a.rows
    if n == 1:
        a = Matrix.zeros(1, 1)
    else:
        k = data.draw(st.integers(0, n - 1))
        coeffs = [data.draw(entries) for _ in range(n)]
        combo = [sum((coeffs[r] * a[r, c] for r in range(n) if r != k), Scalar(0)) for c in range(n)]
        a = Matrix.from_rows([combo if r == k else list(a.row(r)) for r in range(n)])
    with pytest.raises(SingularMatrixError) as info:
        mat_inverse(a)
    assert info.value.rank == rank(a) < n
