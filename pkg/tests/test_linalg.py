from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from pairmds import field_of_order
from pairmds.errors import DimensionMismatch, IndexOutOfRange, SingularMatrix
from pairmds.linalg import (
    FMatrix,
    determinant_nonzero,
    inverse,
    kernel,
    mat_mul,
    rank,
    rref,
    vandermonde,
)

QS = [2, 3, 4, 5, 7, 9]


@st.composite
def matrices(draw, max_rows=5, max_cols=7):
    q = draw(st.sampled_from(QS))
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return FMatrix(field_of_order(q), rows)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_oracle(A):
    f = A.field
    assert rank(A) == oracle.rank(oracle.OracleField(f.p, f.m, f.modulus), A.to_lists())


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_shape_and_row_space(A):
    R, piv = rref(A)
    assert len(piv) == rank(A)
    for i, c in enumerate(piv):
        assert R[i, c] == 1
        assert all(R[j, c] == 0 for j in range(R.rows) if j != i)
        assert not R.data[i, :c].any()
    assert not R.data[len(piv):].any()
    assert R.same_row_space(A)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_kernel_is_complement(A):
    K = kernel(A)
    assert K.shape == (A.cols - rank(A), A.cols)
    if K.rows:
        assert mat_mul(A, K.T).is_zero()
        assert rank(K) == K.rows


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(QS), st.integers(1, 5), st.data())
def test_inverse_roundtrip(q, n, data):
    f = field_of_order(q)
    rows = data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    A = FMatrix(f, rows)
    if rank(A) < n:
        with pytest.raises(SingularMatrix):
            inverse(A)
        assert not determinant_nonzero(A)
    else:
        assert inverse(A) @ A == FMatrix.identity(f, n)
        assert determinant_nonzero(A)


def test_vandermonde_and_arith():
    f = field_of_order(7)
    V = vandermonde(f, [0, 1, 2, 3], 3)
    assert V.to_lists() == [[1, 1, 1, 1], [0, 1, 2, 3], [0, 1, 4, 2]]
    assert (V + V - V) == V
    assert V.scale(3) == V + V + V
    assert (-V + V).is_zero()
    assert V.T.shape == (4, 3)
    assert V.submatrix([0, 2], [1, 3]).to_lists() == [[1, 1], [1, 2]]
    assert V.hstack(V).shape == (3, 8)
    assert V.vstack(V).rank() == 3


def test_errors():
    f = field_of_order(5)
    A = FMatrix.identity(f, 2)
    with pytest.raises(DimensionMismatch):
        mat_mul(A, FMatrix.zeros(f, 3, 3))
    with pytest.raises(IndexOutOfRange):
        A.submatrix([0], [5])
    with pytest.raises(SingularMatrix):
        inverse(FMatrix.zeros(f, 2, 2))
    with pytest.raises(DimensionMismatch):
        inverse(FMatrix.zeros(f, 2, 3))


def test_matrices_are_immutable():
    A = FMatrix.identity(field_of_order(3), 2)
    with pytest.raises(ValueError):
        A.data[0, 0] = 2
    assert np.array_equal(A.data, np.eye(2, dtype=np.int64))
