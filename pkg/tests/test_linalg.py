from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hilbquad import kernel
from hilbquad.linalg import (
    RowSpace,
    SingularMatrixError,
    adjugate3,
    bareiss_rank,
    charpoly,
    det,
    det3,
    identity,
    inverse,
    matmul,
    matrix_rank,
    nullspace,
    solve,
    sparse_rank,
)

small = st.integers(-6, 6)


def matrices(rows=st.integers(1, 6), cols=st.integers(1, 6)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]))


def low_rank(draw_rows=5, draw_cols=6):
    # products of thin factors hit rank deficiency often
    return st.tuples(st.integers(1, 3)).flatmap(lambda k: st.tuples(
        st.lists(st.lists(small, min_size=k[0], max_size=k[0]), min_size=draw_rows, max_size=draw_rows),
        st.lists(st.lists(small, min_size=draw_cols, max_size=draw_cols), min_size=k[0], max_size=k[0]),
    )).map(lambda ab: matmul(*ab))


@given(matrices())
def test_bareiss_rank_matches_sympy(M):
    assert bareiss_rank(M) == sympy.Matrix(M).rank()


@given(low_rank())
def test_rank_backends_agree_on_low_rank(M):
    want = sympy.Matrix(M).rank()
    assert matrix_rank(M) == want
    assert matrix_rank(M, backend="prime") == want


@given(low_rank())
def test_compiled_and_python_kernels_agree(M):
    p = kernel.DEFAULT_PRIME
    py = kernel.rank_mod_p(M, p, impl="python")
    if kernel.BACKEND == "compiled":
        assert kernel.rank_mod_p(M, p, impl="compiled") == py
    assert py == sympy.Matrix(M).rank()


def test_small_prime_detects_modular_rank_drop():
    M = [[1, 2], [3, 1]]  # det = -5
    assert kernel.rank_mod_p(M, 5, impl="python") == 1
    assert matrix_rank(M) == 2


def test_oversized_prime_rejected():
    with pytest.raises(ValueError):
        kernel.rank_mod_p([[1]], 2**62 + 1)


def test_default_prime_is_prime():
    assert sympy.isprime(kernel.DEFAULT_PRIME)
    assert kernel.DEFAULT_PRIME == sympy.nextprime(2**31)


def test_prime_override_from_environment(monkeypatch):
    monkeypatch.setenv("HILBQUAD_PRIME", "101")
    assert kernel.default_prime() == 101


def test_rational_entries_in_prime_backend():
    M = [[Fraction(1, 2), 1], [1, 2]]
    assert matrix_rank(M, backend="prime") == 1


@given(matrices())
def test_sparse_rank_matches_dense(M):
    rows = [{j: v for j, v in enumerate(r) if v} for r in M]
    assert sparse_rank(rows) == matrix_rank(M)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_adjugate_inverse(M):
    sm = sympy.Matrix(M)
    assert det3(M) == det(M) == sm.det()
    assert [list(r) for r in adjugate3(M)] == sm.adjugate().tolist()
    if sm.det() != 0:
        assert matmul(M, inverse(M)) == identity(3)
    else:
        with pytest.raises(SingularMatrixError):
            inverse(M)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=4, max_size=4))
def test_charpoly_matches_sympy(M):
    t = sympy.Symbol("t")
    want = sympy.Poly(sympy.Matrix(M).charpoly(t).as_expr(), t).all_coeffs()
    assert [Fraction(c) for c in charpoly(M)] == [Fraction(int(c)) for c in want]


@given(matrices())
def test_nullspace_is_kernel(M):
    ns = nullspace(M, len(M[0]))
    assert len(ns) == len(M[0]) - matrix_rank(M)
    for v in ns:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in M)


def test_solve():
    assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]


def test_rowspace_equality_and_containment():
    a = RowSpace([[1, 0, 1], [0, 1, 1]])
    b = RowSpace([[1, 1, 2], [1, -1, 0]])
    assert a == b and a.rank == 2
    assert a.contains([2, 3, 5]) and not a.contains([0, 0, 1])
    assert not a.add([1, 1, 2]) and a.add([0, 0, 1]) and a.rank == 3
