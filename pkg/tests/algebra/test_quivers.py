"""Tests for quiver operations."""

import pytest

from src.algebra.quivers import double_quiver, enumerate_paths, longest_path_length, validate_acyclic
from src.core.errors import QuiverError
from src.models.quiver import Arrow, Quiver


def _cycle():
    return Quiver(('1', '2'), (Arrow('α', '1', '2'), Arrow('β', '2', '1')))


def test_validate_acyclic(triangle):
    """Test cycle detection, loops included."""
    assert validate_acyclic(triangle)
    assert not validate_acyclic(_cycle())
    assert not validate_acyclic(Quiver(('1',), (Arrow('λ', '1', '1'),)))


def test_double_quiver(star_tree):
    """Test that every arrow gets a reversed starred partner."""
    doubled = double_quiver(star_tree)
    
    assert doubled.doubled
    assert [a.name for a in doubled.arrows] == ['α', 'β', 'α*', 'β*']
    assert doubled.arrow('β*').source == '2'
    assert doubled.arrow('β*').target == '3'
    with pytest.raises(QuiverError, match="already carries"):
        double_quiver(doubled)
    with pytest.raises(QuiverError, match="oriented cycles"):
        double_quiver(_cycle())


def test_enumerate_paths_canonical_order(triangle):
    """Test path enumeration by length then arrow names."""
    labels = [p.label for p in enumerate_paths(triangle, 3)]
    
    assert labels == ['e1', 'e2', 'e3', 'α', 'β', 'γ', 'β.α']


def test_enumerate_paths_truncates_cycles():
    """Test that a bound makes cyclic quivers finite."""
    paths = enumerate_paths(_cycle(), 3)
    
    assert max(p.length for p in paths) == 3
    assert len(paths) == 2 + 2 + 2 + 2
    with pytest.raises(QuiverError, match="non-negative"):
        enumerate_paths(_cycle(), -1)


def test_longest_path_length(triangle, single_vertex):
    """Test the longest path of acyclic quivers."""
    assert longest_path_length(triangle) == 2
    assert longest_path_length(single_vertex) == 0
    with pytest.raises(QuiverError, match="unbounded"):
        longest_path_length(_cycle())
