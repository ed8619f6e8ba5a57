from fractions import Fraction

from mot2 import linalg
from mot2.scalars import Field

Q = Field.rationals()
F2 = Field.prime(2)


def _rows(rows, fld):
    return [[fld(x) for x in r] for r in rows]


def test_rank_depends_on_characteristic():
    rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert linalg.rank(linalg.matrix(_rows(rows, Q), Q)) == 3
    assert linalg.rank(linalg.matrix(_rows(rows, F2), F2)) == 2


def test_nullspace_vectors_are_killed():
    M = linalg.matrix(_rows([[1, 2, 3], [2, 4, 6]], Q), Q)
    ns = linalg.nullspace(M)
    assert len(ns) == 2
    for v in ns:
        assert all(Q.is_zero(x) for x in linalg.apply(M, v))


def test_sparse_nullspace_matches_dense():
    entries = {0: {0: Q(1), 2: Q(-1)}, 1: {1: Q(1), 2: Q(-1)}}
    M = linalg.sparse_matrix(entries, (2, 3), Q)
    assert linalg.sparse_nullspace(M) == linalg.nullspace(M)
    assert linalg.sparse_nullspace(linalg.zeros(0, 2, Q)) == [[Q(1), Q(0)], [Q(0), Q(1)]]


def test_solve_consistent_and_inconsistent():
    A = linalg.matrix(_rows([[1, 1], [1, -1]], Q), Q)
    sol = linalg.solve_linear_system(A, [Q(3), Q(1)])
    assert sol.consistent
    assert sol.particular == [Q(2), Q(1)]
    B = linalg.matrix(_rows([[1, 1], [2, 2]], Q), Q)
    assert not linalg.solve_linear_system(B, [Q(1), Q(3)]).consistent


def test_coordinates_in_basis():
    basis = [[Q(1), Q(0), Q(1)], [Q(0), Q(1), Q(1)]]
    assert linalg.coordinates(basis, [Q(2), Q(3), Q(5)], Q) == [Q(2), Q(3)]
    assert linalg.coordinates(basis, [Q(0), Q(0), Q(1)], Q) is None
    assert linalg.coordinates([], [Q(0)], Q) == []


def test_row_basis_and_span():
    vecs = [[Q(1), Q(2)], [Q(2), Q(4)], [Q(0), Q(1)]]
    assert linalg.span_rank(vecs, 2, Q) == 2
    assert len(linalg.row_basis(vecs, 2, Q)) == 2
    assert linalg.in_span(vecs[:1], [Q(Fraction(1, 2)), Q(1)], Q)
    assert not linalg.in_span(vecs[:1], [Q(0), Q(1)], Q)


def test_columns_and_transpose_roundtrip():
    M = linalg.matrix(_rows([[1, 2], [3, 4], [5, 6]], Q), Q)
    cols = linalg.columns(M)
    assert linalg.equal(linalg.from_columns(cols, 3, Q), M)
    assert linalg.transpose(M).shape == (2, 3)
    assert linalg.equal(linalg.matmul(linalg.identity(3, Q), M), M)
    assert linalg.is_zero(linalg.zeros(2, 2, Q))
