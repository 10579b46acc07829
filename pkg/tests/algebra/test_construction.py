"""Tests for quotient path algebra construction."""

import pytest
from fractions import Fraction

from src.algebra.construction import build_path_algebra
from src.algebra.dual_extension import build_base_algebra
from src.core.errors import ConstructionError
from src.models.quiver import Arrow, Path, Quiver, Relation


def _commutative_square(coefficient):
    quiver = Quiver(
        ('1', '2', '3', '4'),
        (Arrow('α', '1', '2'), Arrow('β', '2', '4'), Arrow('γ', '1', '3'), Arrow('δ', '3', '4'))
    )
    relation = Relation(((Fraction(1), Path.of('β', 'α')), (Fraction(-coefficient), Path.of('δ', 'γ'))))
    return quiver, relation


def test_path_algebra_without_relations(triangle):
    """Test that the base algebra of the triangle has all its paths."""
    alg = build_base_algebra(triangle)
    
    assert alg.dim == 7
    assert alg.labels == ['e1', 'e2', 'e3', 'α', 'β', 'γ', 'β.α']
    assert alg.multiply(alg.basis_element('β'), alg.basis_element('α')) == alg.basis_element('β.α')


def test_monomial_relation_kills_path(chain_relation):
    """Test that a monomial relation removes the path."""
    alg = build_base_algebra(chain_relation)
    
    assert alg.labels == ['e1', 'e2', 'e3', 'α', 'β']
    assert alg.multiply(alg.basis_element('β'), alg.basis_element('α')).is_zero()


def test_linear_relation_rewrites_pivot():
    """Test that βα = 2·δγ identifies the two paths up to the scalar."""
    quiver, relation = _commutative_square(2)
    alg = build_path_algebra(quiver, [relation], 2)
    
    assert alg.dim == 4 + 4 + 1
    survivor = [label for label in alg.labels if '.' in label]
    assert survivor == ['δ.γ']
    assert alg.multiply(alg.basis_element('β'), alg.basis_element('α')) == alg.basis_element('δ.γ').scale(2)


def test_length_bound_must_cover_the_algebra(triangle):
    """Test that a too-small bound is reported."""
    with pytest.raises(ConstructionError, match="not finite-dimensional within bound 1"):
        build_path_algebra(triangle, (), 1)
    with pytest.raises(ConstructionError, match="positive integer"):
        build_path_algebra(triangle, (), 0)
