import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobcodes.errors import DimensionMismatch, SingularMatrix
from frobcodes.linalg import Matrix, in_row_space, row_space_equal, solve_in_row_space


def matrices(p=7, max_dim=6):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=m, max_size=m
            ).map(lambda rows: Matrix(rows, p))
        )
    )


def test_rref_identity_and_zero():
    eye = Matrix.identity(4, 7)
    assert eye.rref() == (eye, (0, 1, 2, 3), 4)
    z = Matrix.zeros(3, 4, 7)
    assert z.rref() == (z, (), 0)


def test_rref_code1(example, mat7):
    R, pivots, rank = mat7(example["listing"]["1"]).rref()
    # hand elimination: scale f1 by 6, clear, scale by 3, clear
    assert R == mat7([[1, 0, 0, 1, 1, 0], [0, 1, 3, 3, 3, 0], [0, 0, 0, 0, 0, 1]])
    assert pivots == (0, 1, 5)
    assert rank == 3


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rref_properties(m):
    R, pivots, rank = m.rref()
    assert R.rref()[0] == R
    assert list(pivots) == sorted(pivots) and len(pivots) == rank
    for i, c in enumerate(pivots):
        assert R[i, c] == 1
        assert all(R[r, c] == 0 for r in range(R.shape[0]) if r != i)
    assert all(not any(R.rows[r]) for r in range(rank, R.shape[0]))
    assert row_space_equal(R, m)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_transpose(m):
    assert m.rank() == m.T.rank()


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_kernel(m):
    basis = m.kernel_basis()
    assert len(basis) + m.rank() == m.shape[1]
    for v in basis:
        assert not any(m @ v)
    if basis:
        assert Matrix(basis, 7).rank() == len(basis)


def test_kernel_trivial():
    assert Matrix.identity(3, 5).kernel_basis() == []
    assert Matrix.zeros(3, 3, 5).kernel_basis() == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_kernel_example_tau(example, mat7):
    tau = mat7(example["tau"])
    basis = (tau - Matrix.identity(6, 7)).kernel_basis()
    printed = mat7(example["v_plus"]).T
    assert row_space_equal(Matrix(basis, 7), printed)


def test_inverse():
    eye = Matrix.identity(4, 5)
    assert eye.inverse() == eye
    perm = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]], 5)
    assert perm.inverse() == perm.T
    with pytest.raises(SingularMatrix):
        Matrix([[1, 2], [2, 4]], 5).inverse()
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2, 3]], 5).inverse()


def test_inverse_example_sigma(example, mat7):
    sigma = mat7(example["sigma"])
    assert sigma @ sigma.inverse() == Matrix.identity(6, 7)
    assert sigma.inverse() @ sigma == Matrix.identity(6, 7)


@settings(max_examples=100, deadline=None)
@given(matrices(max_dim=5))
def test_det_matches_invertibility(m):
    if m.shape[0] != m.shape[1]:
        return
    assert (m.det() != 0) == (m.rank() == m.shape[0])


def test_det_small():
    # 2x2 by the cross-product formula
    m = Matrix([[3, 5], [2, 6]], 7)
    assert m.det() == (3 * 6 - 5 * 2) % 7


def test_row_space_equal(example, mat7):
    m = mat7(example["listing"]["1"])
    assert row_space_equal(m, m)
    shuffled = mat7([[3 * x for x in m.rows[2]], m.rows[0], [5 * x for x in m.rows[1]]])
    assert row_space_equal(m, shuffled)
    assert not row_space_equal(m, mat7(example["listing"]["2"]))
    with pytest.raises(DimensionMismatch):
        row_space_equal(m, Matrix.identity(3, 7))


def test_in_row_space_and_solve(mat7):
    m = mat7([[1, 2, 0], [0, 1, 1]])
    v = (3, 1, 2)  # 3*r0 + 2*r1 = (3, 8, 2) = (3, 1, 2)
    assert in_row_space(m, v)
    assert solve_in_row_space(m, v) == (3, 2)
    assert not in_row_space(m, (0, 0, 1))
    assert solve_in_row_space(m, (0, 0, 1)) is None


def test_matrix_text():
    m = Matrix([[6, 5, 1], [0, 0, 8]], 7)
    assert str(m) == "6 5 1\n0 0 1"


def test_pow():
    m = Matrix([[1, 1], [0, 1]], 7)
    assert m**7 == Matrix.identity(2, 7)
    assert m**3 == Matrix([[1, 3], [0, 1]], 7)
