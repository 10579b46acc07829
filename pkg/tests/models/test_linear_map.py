"""Tests for linear maps, subspaces and map spaces."""

import pytest
from fractions import Fraction

from src.models.algebra import Element
from src.models.linear_map import LinearMap, MapSpace, Subspace


def test_identity_and_zero():
    """Test the basic maps."""
    x = Element((1, 2, 3))
    
    assert LinearMap.identity(3)(x) == x
    assert LinearMap.zero(3)(x).is_zero()
    assert LinearMap.zero(3).is_zero()


def test_matrix_convention():
    """Test that matrix()[i][j] is coordinate i of the image of b_j."""
    theta = LinearMap.from_matrix([[0, 1], [0, 0]])
    
    assert theta.column(1) == {0: 1}
    assert theta(Element.basis(2, 1)) == Element.basis(2, 0)
    assert theta.matrix() == [[0, 1], [0, 0]]
    with pytest.raises(ValueError, match="not square"):
        LinearMap.from_matrix([[1, 2]])


def test_vector_flattening_round_trip():
    """Test the column-major flattening."""
    theta = LinearMap(2, [{1: Fraction(3)}, {0: Fraction(-1)}])
    
    assert theta.to_vector() == {1: 3, 2: -1}
    assert LinearMap.from_vector(2, theta.to_vector()) == theta


def test_arithmetic_and_composition():
    """Test sums, scaling and composition."""
    shift = LinearMap.from_matrix([[0, 1], [0, 0]])
    swap = LinearMap.from_matrix([[0, 1], [1, 0]])
    
    assert (shift + shift) == shift.scale(2)
    assert (shift - shift).is_zero()
    assert shift.compose(swap) == LinearMap.from_matrix([[1, 0], [0, 0]])
    assert shift.compose(shift).is_zero()
    with pytest.raises(ValueError, match="Dimension mismatch"):
        shift + LinearMap.identity(3)


def test_columns_validated():
    """Test column count and coordinate checks."""
    with pytest.raises(ValueError, match="Expected 2 columns"):
        LinearMap(2, [{}])
    with pytest.raises(ValueError, match="outside"):
        LinearMap(2, [{5: 1}, {}])


def test_subspace_operations():
    """Test containment, coordinates, sum and intersection."""
    plane = Subspace(3, [{0: 1, 1: 1}, {2: 1}])
    line = Subspace(3, [{0: 1, 1: 1, 2: 1}])
    axis = Subspace(3, [{0: 1}])
    
    assert plane.dim == 2
    assert plane.contains_space(line)
    assert plane.coordinates({0: 2, 1: 2, 2: 5}) == [2, 5]
    assert plane.coordinates({0: 1}) is None
    assert plane.witness_outside(axis) == {0: 1}
    assert plane.sum(axis).is_whole()
    assert plane.intersection(axis).is_zero()
    assert plane.intersection(Subspace.whole(3)).dim == 2
    assert Subspace(3).is_zero()


def test_map_space_basis_is_canonical():
    """Test that the same span gives the same basis."""
    a = LinearMap.from_matrix([[1, 0], [0, 0]])
    b = LinearMap.from_matrix([[0, 0], [0, 1]])
    
    first = MapSpace(2, [a, b])
    second = MapSpace(2, [a + b, a - b])
    
    assert first.basis == second.basis
    assert first.contains(LinearMap.identity(2))
    assert not first.contains(LinearMap.from_matrix([[0, 1], [0, 0]]))
    assert first.intersection(MapSpace(2, [a])).dim == 1
    assert first.combined_rank(MapSpace(2, [LinearMap.from_matrix([[0, 1], [0, 0]])])) == 3
