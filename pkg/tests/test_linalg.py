from hypothesis import given, settings
from hypothesis import strategies as st

from toricpoisson.exterior import ExtVector
from toricpoisson.linalg import ExactMatrix, in_span, kernel_basis, rank, solve
from toricpoisson.scalar import I, Scalar
from conftest import scalars


def test_identity_and_zero():
    assert rank(ExactMatrix.identity(3)) == 3
    assert kernel_basis(ExactMatrix.identity(3)) == []
    Z = ExactMatrix.zeros(2, 5)
    assert rank(Z) == 0
    assert len(kernel_basis(Z)) == 5


def test_gaussian_rank_one():
    M = ExactMatrix.from_dense([[1, I], [-I, 1]])
    assert rank(M) == 1
    # the 2x2 determinant vanishes
    assert M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] == 0


def test_in_span_examples():
    assert in_span(ExtVector([0, 0]), [])
    assert not in_span(ExtVector([1, 0]), [ExtVector([0, 1])])
    assert in_span(ExtVector([-2, -1]), [ExtVector([1, 0]), ExtVector([0, 1])])


def test_solve():
    M = ExactMatrix.from_dense([[1, 1], [1, -1]])
    assert solve(M, [Scalar(2), Scalar(0)]) == [1, 1]
    assert solve(ExactMatrix.from_dense([[1, 1], [1, 1]]), [1, 2]) is None


@st.composite
def matrices(draw, max_dim=4):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    entry = st.one_of(st.just(Scalar(0)), scalars(4))
    return ExactMatrix.from_dense([[draw(entry) for _ in range(c)] for _ in range(r)])


@settings(max_examples=200)
@given(matrices())
def test_rank_nullity_and_kernel(M):
    K = kernel_basis(M)
    assert rank(M) + len(K) == M.cols
    for k in K:
        assert all(v == 0 for v in M @ k)
    assert rank(M) == rank(M.transpose())
