from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from qpart.matrix import Echelon, ExactMatrix, nullspace_rows, rank_of_rows, rref_rows


def dense_rank(A):
    A = [list(map(Fraction, r)) for r in A]
    rank, col = 0, 0
    rows = len(A)
    cols = len(A[0]) if A else 0
    while rank < rows and col < cols:
        piv = next((i for i in range(rank, rows) if A[i][col]), None)
        if piv is None:
            col += 1
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(rows):
            if i != rank and A[i][col]:
                f = A[i][col] / A[rank][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
        col += 1
    return rank


mats = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4)
                                 | st.just(Fraction(0)), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(mats)
def test_rank_matches_dense(A):
    M = ExactMatrix.from_dense(A)
    assert M.rank() == dense_rank(A)


@given(mats)
def test_nullspace(A):
    M = ExactMatrix.from_dense(A)
    ns = M.nullspace()
    assert len(ns) == M.cols - M.rank()
    for v in ns:
        for row in A:
            assert sum(row[j] * v.get(j, 0) for j in range(M.cols)) == 0
    assert rank_of_rows(ns) == len(ns)


@given(mats)
def test_rref_shape(A):
    piv, red = ExactMatrix.from_dense(A).rref()
    assert len(piv) == dense_rank(A)
    for c, r in zip(piv, red):
        assert r[c] == 1
        assert all(c == c2 or c2 not in r for c2 in piv)


@given(mats, mats)
def test_matmul_transpose(A, B):
    MA, MB = ExactMatrix.from_dense(A), ExactMatrix.from_dense(B)
    if MA.cols == MB.rows:
        C = (MA @ MB)
        assert C.to_dense() == [[sum(A[i][l] * B[l][j] for l in range(len(B))) for j in range(len(B[0]))]
                                for i in range(len(A))]
        assert C.transpose() == MB.T @ MA.T


def test_basic_ops():
    I = ExactMatrix.identity(3)
    assert I.is_idempotent() and I.trace() == 3 and I.nnz() == 3
    A = ExactMatrix.from_dense([[1, 2], [3, 4]])
    assert (A - A).nnz() == 0 and (A + A) == A.scale(2)
    assert A.restrict([1]).to_dense() == [[4]]
    assert A.flatten() == {0: 1, 1: 2, 2: 3, 3: 4}
    assert ExactMatrix.from_dense([[Fraction(1, 2), 0], [0, 0]]).scale(2) == ExactMatrix(2, 2, {(0, 0): 1})


def test_echelon_incremental():
    E = Echelon()
    assert E.add({0: 2, 1: 4})
    assert not E.add({0: Fraction(1, 3), 1: Fraction(2, 3)})
    assert E.add({1: 1})
    assert E.rank == 2
    assert nullspace_rows([{0: 1, 1: 1}], 2) == [{1: 1, 0: -1}]
    assert rref_rows([]) == ([], [])
