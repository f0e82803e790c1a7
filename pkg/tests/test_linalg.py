"""Exact elimination against an independent oracle, and the window kernels."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lacunary import (
    KernelBasis,
    Window,
    WindowTooSmall,
    finite_support_kernel,
    free_kernel_dim,
    is_global_solution_finite,
    projection_dims,
    rank_and_nullspace,
    window_matrix,
)
from lacunary.corpus import (
    fibonacci_operator,
    vanish_on_multiples_operator,
    zero_operator,
)

from .oracles import (
    matrix_times_vector,
    naive_rank_nullspace,
    spans_equal,
    support_confined_nullity,
    support_confined_system,
)
from .strategies import residue_operators, small_matrices


def frac_matrix(rows):
    return [[Fraction(v) for v in row] for row in rows]


def test_rank_and_nullspace_basics():
    rank, basis = rank_and_nullspace(frac_matrix([[1, 1], [0, 0]]))
    assert rank == 1
    assert basis == [(Fraction(1), Fraction(-1))]
    rank, basis = rank_and_nullspace(frac_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert (rank, basis) == (3, [])
    rank, basis = rank_and_nullspace(frac_matrix([[0, 0], [0, 0]]))
    assert rank == 0
    assert basis == [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]


def test_rank_and_nullspace_rejects_bad_input():
    with pytest.raises(ValueError):
        rank_and_nullspace(frac_matrix([[1, 2], [1]]))
    with pytest.raises(ValueError):
        rank_and_nullspace(frac_matrix([[1]]), mode="sparse")


def test_nullspace_is_canonical():
    # integer entries, content 1, positive leading entry
    _, basis = rank_and_nullspace(frac_matrix([[2, 4], [0, 0]]))
    assert basis == [(Fraction(2), Fraction(-1))]
    _, basis = rank_and_nullspace([[Fraction(1, 3), Fraction(1, 6)]])
    assert basis == [(Fraction(1), Fraction(-2))]


def test_vanish_operator_window_system_nullity():
    op = vanish_on_multiples_operator(2)
    m = window_matrix(op, Window(0, 8), "support_confined")
    rank, basis = rank_and_nullspace(m.rows)
    assert len(basis) == 6
    assert support_confined_nullity(op, 0, 8) == 6


@given(small_matrices)
def test_banded_and_dense_paths_agree(rows):
    matrix = frac_matrix(rows)
    assert rank_and_nullspace(matrix, "banded") == rank_and_nullspace(matrix, "dense")


@given(small_matrices)
def test_rank_nullity_and_exactness_against_oracle(rows):
    matrix = frac_matrix(rows)
    ncols = len(matrix[0])
    rank, basis = rank_and_nullspace(matrix)
    oracle_rank, oracle_basis = naive_rank_nullspace(matrix)
    assert rank == oracle_rank
    assert rank + len(basis) == ncols
    for v in basis:
        assert all(entry == 0 for entry in matrix_times_vector(matrix, v))
    assert spans_equal(basis, oracle_basis, ncols)


@settings(max_examples=40)
@given(residue_operators, st.integers(min_value=-6, max_value=6), st.integers(min_value=0, max_value=12))
def test_window_system_matches_unit_residual_oracle(op, lo, length):
    hi = lo + length
    m = window_matrix(op, Window(lo, hi), "support_confined")
    assert [list(row) for row in m.rows] == support_confined_system(op, lo, hi)


def test_finite_support_kernel_vanish_free_indices():
    op = vanish_on_multiples_operator(2)
    kb = finite_support_kernel(op, Window(1, 2))
    assert kb.dimension == 2
    assert sorted(s.anchor for s in kb.solutions()) == [1, 2]
    for s in kb.solutions():
        assert s.values == (Fraction(1),)


def test_finite_support_kernel_fibonacci_trivial():
    fib = fibonacci_operator()
    for w in (Window(0, 10), Window(-30, 30), Window(-100, 99)):
        assert finite_support_kernel(fib, w).dimension == 0


def test_finite_support_kernel_zero_operator():
    kb = finite_support_kernel(zero_operator(), Window(0, 4))
    assert kb.dimension == 5
    assert all(is_global_solution_finite(zero_operator(), s) for s in kb.solutions())


@settings(max_examples=30)
@given(residue_operators, st.integers(min_value=-5, max_value=5), st.integers(min_value=0, max_value=8))
def test_kernel_dimension_monotone_under_window_growth(op, lo, length):
    inner = Window(lo, lo + length)
    outer = Window(lo - 3, lo + length + 3)
    d_inner = finite_support_kernel(op, inner).dimension
    d_outer = finite_support_kernel(op, outer).dimension
    assert d_inner <= d_outer


def test_free_kernel_dim():
    assert free_kernel_dim(fibonacci_operator(), Window(0, 10)) == 2
    assert free_kernel_dim(zero_operator(), Window(0, 4)) == 5
    assert free_kernel_dim(vanish_on_multiples_operator(2), Window(0, 8)) == 6
    with pytest.raises(WindowTooSmall):
        free_kernel_dim(fibonacci_operator(), Window(0, 1))


def test_free_kernel_order_zero():
    op = zero_operator(0)
    assert op.order == 0
    assert free_kernel_dim(op, Window(2, 4)) == 3


def test_projection_dims_examples():
    assert projection_dims(vanish_on_multiples_operator(2), 1, 3, 30) == [1, 2, 2]
    assert projection_dims(fibonacci_operator(), 0, 3, 50) == [0, 0, 0]
    assert projection_dims(zero_operator(), 0, 4, 10) == [1, 2, 3, 4]


def test_projection_dims_validation():
    op = zero_operator()
    with pytest.raises(ValueError):
        projection_dims(op, 0, 0, 5)
    with pytest.raises(ValueError):
        projection_dims(op, 0, 6, 5)


@settings(max_examples=25)
@given(residue_operators, st.integers(min_value=-4, max_value=4), st.integers(min_value=1, max_value=4))
def test_projection_dims_non_increasing_in_budget(op, ray_start, i_max):
    small = projection_dims(op, ray_start, i_max, 12)
    large = projection_dims(op, ray_start, i_max, 24)
    for a, b in zip(small, large):
        assert b <= a


def test_kernel_basis_validation():
    with pytest.raises(ValueError):
        KernelBasis(Window(0, 2), ((Fraction(1),),))
