from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sphereforge.exactlin import (
    Matrix,
    block_diag,
    hstack,
    image_basis,
    inverse,
    is_invertible,
    kernel_basis,
    rank,
    scalar,
    solve,
    vstack,
)

entries = st.integers(min_value=-5, max_value=5)


@st.composite
def matrices(draw, max_dim=4):
    r = draw(st.integers(min_value=0, max_value=max_dim))
    c = draw(st.integers(min_value=0, max_value=max_dim))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix(r, c, rows)


def test_scalar_coercion():
    assert scalar("3/6") == Fraction(1, 2)
    assert scalar(4) == Fraction(4)
    with pytest.raises(TypeError):
        scalar(True)
    with pytest.raises(TypeError):
        scalar(0.5)


def test_shape_is_checked():
    with pytest.raises(ValueError):
        Matrix(2, 2, [[1, 2]])


def test_product_and_identity():
    m = Matrix(2, 3, [[1, 2, 3], [4, 5, 6]])
    assert Matrix.identity(2) @ m == m
    assert m @ Matrix.identity(3) == m
    assert (m @ m.T)[0, 1] == 32


def test_stacking():
    a, b = Matrix(1, 1, [[1]]), Matrix(1, 2, [[2, 3]])
    assert hstack([a, b]).to_lists() == [[1, 2, 3]]
    assert vstack([b, b]).shape == (2, 2)
    assert block_diag([a, b]).to_lists() == [[1, 0, 0], [0, 2, 3]]
    # empty blocks keep their declared size
    assert hstack([], rows=3).shape == (3, 0)
    assert vstack([], cols=2).shape == (0, 2)


def test_inverse_of_singular_is_none():
    assert inverse(Matrix(2, 2, [[1, 2], [2, 4]])) is None
    m = Matrix(2, 2, [[2, 1], [1, 1]])
    assert inverse(m) @ m == Matrix.identity(2)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert all(x == 0 for x in m @ v)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_image_basis_spans_columns(m):
    img = image_basis(m)
    assert len(img) == rank(m)
    if img:
        basis = Matrix.from_columns(img, m.rows)
        for j in range(m.cols):
            assert solve(basis, m.column(j)) is not None


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(entries, min_size=4, max_size=4))
def test_solve_recovers_consistent_rhs(m, x):
    x = x[: m.cols]
    b = m @ tuple(scalar(v) for v in x)
    sol = solve(m, b)
    assert sol is not None
    assert m @ sol == b


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=3))
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.T)
    if m.rows == m.cols:
        assert is_invertible(m) == (rank(m) == m.rows)
