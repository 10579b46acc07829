"""Tests for exact sparse linear algebra."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from src.core.linalg import (
    RowReducer, clean_row, dense_nullspace, nullspace, rank, solve_affine, span_basis, to_dense, to_sparse
)


def _apply(row, vector):
    return sum(c * vector.get(k, 0) for k, c in row.items())


def test_clean_row_and_conversions():
    """Test dropping zeros and dense/sparse conversion."""
    row = {0: Fraction(1), 2: Fraction(0), 3: Fraction(-2)}
    
    assert clean_row(row) == {0: 1, 3: -2}
    assert to_dense(clean_row(row), 4) == [1, 0, 0, -2]
    assert to_sparse([0, Fraction(1, 2), 0]) == {1: Fraction(1, 2)}


def test_row_reducer_rank_and_contains():
    """Test incremental elimination."""
    reducer = RowReducer()
    
    assert reducer.add({0: 1, 1: 1})
    assert reducer.add({1: 1, 2: 1})
    assert not reducer.add({0: 1, 1: 2, 2: 1})
    assert reducer.rank == 2
    assert reducer.pivots == [0, 1]
    assert reducer.contains({0: 2, 2: -2})
    assert not reducer.contains({2: 1})


def test_rref_is_reduced():
    """Test that RREF rows have zeros above and below each pivot."""
    reducer = RowReducer()
    reducer.add({0: 2, 1: 4, 2: 2})
    reducer.add({1: 1, 2: 3})
    
    rref = reducer.rref()
    assert rref == {0: {0: 1, 2: -5}, 1: {1: 1, 2: 3}}
    assert span_basis([{0: 2, 1: 4, 2: 2}, {1: 1, 2: 3}]) == list(rref.values())


def test_nullspace_free_columns_in_order():
    """Test the canonical nullspace basis."""
    vectors = nullspace([{0: 1, 1: -1}], 3)
    
    assert vectors == [{1: 1, 0: 1}, {2: 1}]


def test_solve_affine_consistent_and_inconsistent():
    """Test the canonical solution and inconsistency detection."""
    solution = solve_affine([({0: 1, 1: 1}, Fraction(3)), ({1: 1}, Fraction(1))], 2)
    assert solution == {0: 2, 1: 1}
    
    assert solve_affine([({0: 1}, Fraction(1)), ({0: 2}, Fraction(3))], 1) is None
    assert solve_affine([({0: 1, 1: 1}, Fraction(0))], 2) == {}


def test_dense_nullspace_matches_sparse():
    """Test the dense solver on a small system."""
    matrix = [[1, 2, 0, -1], [0, 0, 1, 1], [1, 2, 1, 0]]
    dense = dense_nullspace(matrix)
    
    assert len(dense) == 2
    for vector in dense:
        for row in matrix:
            assert sum(a * b for a, b in zip(row, vector)) == 0


rows_strategy = st.lists(
    st.dictionaries(st.integers(0, 5), st.integers(-3, 3).map(Fraction), max_size=4),
    max_size=6
)


@settings(max_examples=60, deadline=None)
@given(rows_strategy)
def test_nullspace_solves_system(rows):
    """Every nullspace vector solves the system and the dimensions add up."""
    vectors = nullspace(rows, 6)
    
    for vector in vectors:
        for row in rows:
            assert _apply(row, vector) == 0
    assert len(vectors) + rank(rows) == 6


@settings(max_examples=60, deadline=None)
@given(rows_strategy)
def test_dense_and_sparse_nullity_agree(rows):
    """The independent dense solver finds the same nullity."""
    if not rows:
        return
    dense = dense_nullspace([to_dense(clean_row(r), 6) for r in rows])
    
    assert len(dense) == len(nullspace(rows, 6))
