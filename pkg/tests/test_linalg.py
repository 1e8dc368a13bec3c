from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgesimple import linalg
from oracles import leibniz_det, naive_rank

small = st.integers(min_value=-6, max_value=6)
rat = st.builds(Fraction, small, st.integers(min_value=1, max_value=5))


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5), elem=rat):
    return rows.flatmap(lambda m: cols.flatmap(
        lambda n: st.lists(st.lists(elem, min_size=n, max_size=n), min_size=m, max_size=m)))


@given(matrices())
def test_rank_matches_naive(M):
    assert linalg.rank(M) == naive_rank(M)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rat, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_leibniz(M):
    assert linalg.det(M) == leibniz_det(M)


@given(matrices())
def test_nullspace_vectors_are_killed(M):
    n = len(M[0])
    N = linalg.nullspace(M, n)
    assert len(N) == n - naive_rank(M)
    for v in N:
        assert all(x == 0 for x in linalg.matvec(M, v))


@given(matrices(), st.lists(rat, min_size=5, max_size=5))
def test_solve_consistent_systems(M, x):
    x = x[: len(M[0])]
    b = linalg.matvec(M, x)
    sol = linalg.solve(M, b)
    assert sol is not None
    assert linalg.matvec(M, sol) == b


def test_solve_inconsistent_returns_none():
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rat, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse(M):
    if naive_rank(M) < len(M):
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(M)
    else:
        assert linalg.matmul(M, linalg.inverse(M)) == linalg.identity(len(M))


@settings(max_examples=60)
@given(matrices(rows=st.integers(1, 8), cols=st.integers(1, 8), elem=small))
def test_sparse_echelon_rank(M):
    ech = linalg.SparseEchelon()
    for row in M:
        ech.add({j: x for j, x in enumerate(row) if x})
    assert len(ech) == naive_rank(M)
    for row in M:
        assert ech.contains({j: x for j, x in enumerate(row) if x})


def test_same_span_and_minors():
    U = [[1, 0, 1], [0, 1, 1]]
    V = [[1, 1, 2], [1, -1, 0]]
    assert linalg.same_span(U, V)
    assert not linalg.same_span(U, [[1, 0, 0]])
    assert linalg.leading_principal_minors([[2, 1], [1, 2]]) == [2, 3]


def test_bareiss_entries_are_integers():
    E, piv = linalg.bareiss([[Fraction(1, 2), 1], [Fraction(1, 3), 2]])
    assert piv == [0, 1]
    assert all(isinstance(x, int) for row in E for x in row)
