from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from whitehouse.linalg import (RationalMatrix, RowSpace, SparseEchelon, integer_row, is_invertible,
                               rank, rref, solve, trace)

from oracles import sympy_rank, sympy_rref

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_identity_rref_and_trace():
    m = RationalMatrix.identity(3)
    r, piv = rref(m)
    assert r == m and piv == [0, 1, 2]
    assert trace(m) == 3


def test_rank_deficient_example():
    m = RationalMatrix.from_rows([[1, 2], [2, 4]])
    r, piv = rref(m)
    assert piv == [0]
    assert r.to_rows() == [[1, 2], [0, 0]]
    assert rank(m) == 1
    assert not is_invertible(m)


def test_trace_needs_square():
    with pytest.raises(ValueError):
        trace(RationalMatrix.zeros(2, 3))


def test_solve_inconsistent_and_consistent():
    m = RationalMatrix.from_rows([[1, 1], [1, 1]])
    assert solve(m, [1, 2]) is None
    x = solve(RationalMatrix.from_rows([[2, 0], [0, 3]]), [1, 1])
    assert x == [Fraction(1, 2), Fraction(1, 3)]


def test_immutable_and_shape_checks():
    m = RationalMatrix.identity(2)
    with pytest.raises(AttributeError):
        m.rows = 3
    with pytest.raises(ValueError):
        RationalMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        m @ RationalMatrix.zeros(3, 1)


def test_integer_row_is_primitive():
    assert integer_row([Fraction(1, 2), Fraction(-3, 4), 0]) == [2, -3, 0]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_matches_sympy(rows):
    r, piv = rref(RationalMatrix.from_rows(rows))
    ref_rows, ref_piv = sympy_rref(rows)
    assert piv == ref_piv
    assert r.to_rows()[:len(piv)] == ref_rows
    assert rank(RationalMatrix.from_rows(rows)) == sympy_rank(rows)


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_rowspace_membership(rows, data):
    sp = RowSpace(rows, len(rows[0]))
    coefs = data.draw(st.lists(small, min_size=len(rows), max_size=len(rows)))
    v = [sum((c * r[k] for c, r in zip(coefs, rows)), Fraction(0)) for k in range(len(rows[0]))]
    assert sp.contains(v)
    assert not any(sp.residual(v))


@settings(max_examples=100, deadline=None)
@given(matrices(8, 7))
def test_sparse_echelon_agrees_with_dense(rows):
    ncols = len(rows[0])
    ech = SparseEchelon()
    for r in rows:
        # reversed columns: the sparse form eliminates the largest column first
        ech.add({ncols - 1 - k: v for k, v in enumerate(r) if v})
    piv = ech.finish()
    ref_rows, ref_piv = sympy_rref(rows)
    assert ech.rank == len(ref_piv)
    assert sorted(ncols - 1 - c for c in piv) == ref_piv
    for row, c in zip(ref_rows, ref_piv):
        assert piv[ncols - 1 - c] == {ncols - 1 - k: v for k, v in enumerate(row) if v}


@settings(max_examples=60, deadline=None)
@given(matrices(4, 4))
def test_matmul_identity(rows):
    m = RationalMatrix.from_rows(rows)
    assert m @ RationalMatrix.identity(m.cols) == m
    assert m.transpose().transpose() == m
