"""Tests for quivers, paths and relations."""

import pytest
from fractions import Fraction

from src.core.errors import QuiverError
from src.models.quiver import Arrow, Path, Quiver, Relation


def _a3():
    return Quiver(('1', '2', '3'), (Arrow('α', '1', '2'), Arrow('β', '2', '3')))


def test_path_labels_and_concatenation():
    """Test trivial and nontrivial path labels."""
    alpha = Path.of('α')
    beta = Path.of('β')
    
    assert Path.trivial('2').label == 'e2'
    assert beta.then(alpha).label == 'β.α'
    assert beta.then(alpha).length == 2
    assert Path.trivial('1').then(alpha) == alpha
    assert alpha.then(Path.trivial('1')) == alpha


def test_path_requires_consistent_fields():
    """Test that trivial paths need a vertex and nontrivial ones do not carry one."""
    with pytest.raises(QuiverError, match="needs a base vertex"):
        Path(())
    with pytest.raises(QuiverError, match="no base vertex"):
        Path(('α',), '1')


def test_subpaths():
    """Test contiguous subpath enumeration."""
    path = Path.of('γ', 'β', 'α')
    
    assert [p.label for p in path.subpaths(2)] == ['γ.β', 'β.α']


def test_relation_validation():
    """Test length and homogeneity constraints on relations."""
    with pytest.raises(QuiverError, match="at least 2 arrows"):
        Relation.monomial(Path.of('α'))
    with pytest.raises(QuiverError, match="different lengths"):
        Relation(((Fraction(1), Path.of('β', 'α')), (Fraction(1), Path.of('γ', 'β', 'α'))))
    with pytest.raises(QuiverError, match="no nonzero terms"):
        Relation(((Fraction(1), Path.of('β', 'α')), (Fraction(-1), Path.of('β', 'α'))))


def test_quiver_endpoints():
    """Test endpoint derivation and path checking."""
    quiver = _a3()
    path = Path.of('β', 'α')
    
    quiver.check_path(path)
    assert quiver.source_of(path) == '1'
    assert quiver.target_of(path) == '3'
    with pytest.raises(QuiverError, match="ends at 3 but .α. starts at 1"):
        quiver.check_path(Path.of('α', 'β'))


def test_quiver_rejects_bad_data():
    """Test validation of vertices and arrows."""
    with pytest.raises(QuiverError, match="Duplicate vertex"):
        Quiver(('1', '1'))
    with pytest.raises(QuiverError, match="unknown vertex"):
        Quiver(('1',), (Arrow('α', '1', '2'),))
    with pytest.raises(QuiverError, match="reserved"):
        Quiver(('1', '2'), (Arrow('α', '1', '2'), Arrow('α*', '2', '1')))
    with pytest.raises(QuiverError, match="collides"):
        Quiver(('1', '2'), (Arrow('e1', '1', '2'),))
    with pytest.raises(QuiverError, match="at least one vertex"):
        Quiver(())


def test_non_parallel_relation_rejected():
    """Test that relation paths must share endpoints."""
    quiver = Quiver(
        ('1', '2', '3', '4'),
        (Arrow('α', '1', '2'), Arrow('β', '2', '3'), Arrow('γ', '2', '4'))
    )
    relation = Relation(((Fraction(1), Path.of('β', 'α')), (Fraction(1), Path.of('γ', 'α'))))
    
    with pytest.raises(QuiverError, match="not parallel"):
        quiver.with_relations([relation])


def test_sources_sinks_and_connectivity(star_tree):
    """Test graph queries."""
    assert star_tree.sources() == ['1', '3']
    assert star_tree.sinks() == ['2']
    assert star_tree.is_connected()
    assert not Quiver(('1', '2')).is_connected()


def test_remove_vertex_drops_arrows_and_relations(chain_relation):
    """Test vertex removal."""
    smaller = chain_relation.remove_vertex('3')
    
    assert smaller.vertices == ('1', '2')
    assert [a.name for a in smaller.arrows] == ['α']
    assert smaller.relations == ()
    with pytest.raises(QuiverError, match="Unknown vertex"):
        chain_relation.remove_vertex('9')
