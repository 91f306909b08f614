import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import oracle_rank
from hullmass.field import FieldError, gf, hermitian_field
from hullmass.matrix import (
    Matrix,
    MatrixError,
    conj_transpose,
    diag_ones,
    gram,
    hermitian_unitarize,
    inverse,
    is_hermitian,
    is_skew,
    j2_blocks,
    nullspace,
    omega,
    rank,
    rref,
    skew_reduce,
    vstack,
)

FIELDS = [2, 3, 4, 5, 9]


@st.composite
def matrices(draw, orders=FIELDS, max_dim=5):
    order = draw(st.sampled_from(orders))
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    data = draw(st.lists(st.integers(0, order - 1), min_size=r * c, max_size=r * c))
    return Matrix(gf(order), np.array(data, dtype=np.int64).reshape(r, c))


@given(matrices())
def test_rank_matches_scalar_oracle(M):
    assert rank(M) == oracle_rank(M.field, M.tolist())


@given(matrices())
def test_rref_transform(M):
    R = rref(M)
    assert R.transform @ M == R.R
    assert R.R.data[: R.rank][np.arange(R.rank), list(R.pivots)].tolist() == [1] * R.rank
    assert R.R.data[R.rank :].sum() == 0


@given(matrices())
def test_nullspace_is_right_kernel(M):
    N = nullspace(M)
    assert N.rows == M.cols - rank(M)
    if N.rows:
        assert (M @ N.T).is_zero()
        assert rank(N) == N.rows


@settings(max_examples=60)
@given(st.sampled_from(FIELDS), st.integers(1, 5), st.data())
def test_inverse(order, n, data):
    F = gf(order)
    vals = data.draw(st.lists(st.integers(0, order - 1), min_size=n * n, max_size=n * n))
    M = Matrix(F, np.array(vals, dtype=np.int64).reshape(n, n))
    if rank(M) < n:
        with pytest.raises(MatrixError):
            inverse(M)
    else:
        assert (M @ inverse(M)).is_identity()


def test_extension_field_matmul_uses_field_arithmetic():
    F = gf(4)
    A = Matrix.from_rows(F, [[2, 3]])
    B = Matrix.from_rows(F, [[2], [2]])
    # w*w + w^2*w = w^2 + 1 = w
    assert (A @ B).tolist() == [[2]]


def test_shape_and_field_errors():
    F = gf(4)
    with pytest.raises(MatrixError):
        Matrix.identity(F, 2) @ Matrix.identity(F, 3)
    with pytest.raises(FieldError):
        Matrix.identity(F, 2) + Matrix.identity(gf(2), 2)
    with pytest.raises((MatrixError, FieldError)):
        Matrix.from_rows(F, [[4]])
    with pytest.raises(MatrixError):
        gram(Matrix.from_rows(gf(2), [[1, 0, 1]]), "symplectic")


def test_omega_and_j2():
    F = gf(3)
    W = omega(F, 2)
    assert W.tolist() == [[0, 0, 1, 0], [0, 0, 0, 1], [2, 0, 0, 0], [0, 2, 0, 0]]
    assert is_skew(W)
    assert j2_blocks(F, 1, 3).tolist() == [[0, 1, 0], [2, 0, 0], [0, 0, 0]]


def test_vstack_and_conj_transpose():
    F = gf(4)
    M = Matrix.from_rows(F, [[1, 2], [3, 0]])
    assert vstack(M, M).rows == 4
    assert conj_transpose(M).tolist() == [[1, 2], [3, 0]]
    assert is_hermitian(gram(M, "hermitian"))


def _random_skew(F, n, rng):
    A = rng.integers(0, F.order, size=(n, n))
    M = Matrix(F, np.triu(A, 1))
    return M - M.T


@pytest.mark.parametrize("order", [2, 3, 4, 5])
def test_skew_reduce_block_form(order, rng):
    F = gf(order)
    for _ in range(40):
        n = int(rng.integers(1, 7))
        M = _random_skew(F, n, rng)
        Q, t = skew_reduce(M)
        assert t % 2 == 0 and t == rank(M)
        assert Q @ M @ Q.T == j2_blocks(F, t // 2, n)
        assert rank(Q) == n


@pytest.mark.parametrize("q", [2, 3])
def test_hermitian_unitarize(q, rng):
    F = hermitian_field(q)
    done = 0
    while done < 40:
        n = int(rng.integers(1, 5))
        G = Matrix(F, rng.integers(0, F.order, size=(n, n)))
        H = gram(G, "hermitian")
        if rank(H) < n:
            continue
        Q = hermitian_unitarize(H)
        assert Q @ H @ conj_transpose(Q) == diag_ones(F, n, n)
        done += 1


def test_unitarize_all_isotropic_basis():
    # Gram [[0,1],[1,0]]: both basis vectors isotropic
    F = gf(4)
    H = Matrix.from_rows(F, [[0, 1], [1, 0]])
    Q = hermitian_unitarize(H)
    assert (Q @ H @ conj_transpose(Q)).is_identity()
