"""Tests for symbolic elements and maps."""

import pytest
from fractions import Fraction

from src.algebra.symbolic import SymbolicElement, SymbolicMap, collect_equations, collect_rows
from src.algebra.spaces import grading_derivation
from src.core.linalg import nullspace


def test_full_map_uses_column_major_numbering():
    """Test that variable (j, i) is j·dim + i."""
    theta = SymbolicMap.full(3)
    
    assert theta.n_vars == 9
    assert theta.var(2, 1) == 7
    assert theta.image_basis(2).coords == {0: {6: 1}, 1: {7: 1}, 2: {8: 1}}


def test_realize_round_trip():
    """Test that realizing a solution gives the matching map."""
    theta = SymbolicMap.full(2)
    realized = theta.realize({1: Fraction(3), 2: Fraction(-1)}, 2)
    
    assert realized.to_vector() == {1: 3, 2: -1}


def test_restricted_map_domain():
    """Test unknown maps on part of the basis."""
    theta = SymbolicMap([1], [{0: 1, 1: 1}])
    
    assert theta.n_vars == 1
    assert theta.image({1: Fraction(2)}).coords == {0: {0: 2}, 1: {0: 2}}
    with pytest.raises(ValueError, match="outside the map's domain"):
        theta.image_basis(0)


def test_equations_and_rows():
    """Test conversion of expressions into linear systems."""
    x = SymbolicElement({0: {0: Fraction(1), 1: Fraction(1)}})
    affine = x - SymbolicElement.of_constant({0: Fraction(2), 1: Fraction(5)})
    
    assert collect_equations([affine]) == [({0: 1, 1: 1}, 2), ({}, 5)]
    assert collect_rows([x]) == [{0: 1, 1: 1}]
    with pytest.raises(ValueError, match="affine expression"):
        affine.rows()


def test_products_in_an_algebra(star_dual):
    """Test that the derivation law written symbolically is solved by the grading map."""
    alg = star_dual.algebra
    theta = SymbolicMap.full(alg.dim)
    i, j = alg.index_of('α*'), alg.index_of('α')
    defect = (
        theta.image(alg.product(i, j))
        - theta.image_basis(i).right_mul(alg, {j: 1})
        - theta.image_basis(j).left_mul(alg, {i: 1})
    )
    grading = grading_derivation(alg).to_vector()
    
    assert nullspace(defect.rows(), theta.n_vars)
    for row in defect.rows():
        assert sum(c * grading.get(var, 0) for var, c in row.items()) == 0
