"""Tests for dual and one-point extensions."""

import pytest

from src.algebra.dual_extension import (
    DUAL, ONEPOINT, build_dual_extension, build_extension, build_one_point_extension, split_shape, star_path
)
from src.core.errors import ConstructionError, QuiverError
from src.models.quiver import Arrow, Path, Quiver


def test_dimensions(star_dual, triangle_dual, chain_dual, a2_dual, a2_onepoint, single_dual):
    """Test the dimensions of the bundled extensions."""
    assert star_dual.algebra.dim == 11
    assert triangle_dual.algebra.dim == 21
    assert chain_dual.algebra.dim == 9
    assert a2_dual.algebra.dim == 5
    assert a2_onepoint.algebra.dim == 4
    assert single_dual.algebra.dim == 1


def test_star_tree_basis(star_dual):
    """Test the basis of the dual extension of the star tree."""
    assert star_dual.algebra.labels == [
        'e1', 'e2', 'e3', 'α', 'α*', 'β', 'β*', 'α*.α', 'α*.β', 'β*.α', 'β*.β'
    ]
    assert star_dual.kind == DUAL
    assert star_dual.star_map == {'α': 'α*', 'β': 'β*'}


def test_one_point_kills_mixed_paths(star_onepoint):
    """Test that E(Λ) has no path mixing starred and unstarred arrows."""
    alg = star_onepoint.algebra
    
    assert star_onepoint.kind == ONEPOINT
    assert alg.labels == ['e1', 'e2', 'e3', 'α', 'α*', 'β', 'β*']
    assert alg.multiply(alg.basis_element('α*'), alg.basis_element('α')).is_zero()


def test_every_basis_path_has_shape(triangle_dual):
    """Test the q*·p factorisation of every basis path."""
    for (q_star, p), path in zip(triangle_dual.shape(), triangle_dual.algebra.basis):
        assert all(name.endswith('*') for name in q_star.arrows)
        assert not any(name.endswith('*') for name in p.arrows)
        assert q_star.then(p) == path or path.is_trivial


def test_star_path():
    """Test reversal with stars."""
    assert star_path(Path.of('β', 'α')).label == 'α*.β*'
    assert star_path(Path.trivial('1')) == Path.trivial('1')
    with pytest.raises(QuiverError, match="no star partner"):
        star_path(Path.of('α*'))


def test_split_shape_rejects_wrong_order(star_dual):
    """Test that an unstarred arrow before a starred one is not of the q*·p shape."""
    doubled = star_dual.algebra.quiver
    
    with pytest.raises(ConstructionError, match="not of the form"):
        split_shape(doubled, Path.of('α', 'α*'))


def test_source_quiver_requirements(single_vertex):
    """Test the input checks."""
    cyclic = Quiver(('1', '2'), (Arrow('α', '1', '2'), Arrow('β', '2', '1')))
    with pytest.raises(QuiverError, match="oriented cycles"):
        build_dual_extension(cyclic)
    with pytest.raises(QuiverError, match="at least 2 vertices"):
        build_one_point_extension(single_vertex)
    with pytest.raises(ValueError, match="Unknown extension kind"):
        build_extension(single_vertex, 'triple')
