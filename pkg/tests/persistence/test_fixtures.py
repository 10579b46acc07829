"""Tests for map fixtures."""

import json
import pytest
import tempfile
import os
from fractions import Fraction
from pathlib import Path

from src.persistence.fixtures import evaluate, fixture_from_dict, is_fixture_file, load_fixture


def _minimal(**extra):
    data = {'name': 'shift', 'quiver': 'a2.quiver', 'images': {'α': {'α': 1}}}
    data.update(extra)
    return data


def test_bundled_fixture(chain_lie_fixture):
    """Test the fields of the bundled fixture."""
    assert chain_lie_fixture.mode == 'dual'
    assert chain_lie_fixture.parameters == ('k1', 'k2', 'k3')
    assert chain_lie_fixture.variant_names == ['beta', 'beta-star']
    assert chain_lie_fixture.derivation is False


def test_variant_images(chain_lie_fixture):
    """Test that a variant replaces selected images."""
    assert chain_lie_fixture.images_for('beta-star')['β'] == {'β*': 1}
    assert 'β' not in chain_lie_fixture.images_for()
    with pytest.raises(ValueError, match="unknown variant 'gamma'"):
        chain_lie_fixture.images_for('gamma')


def test_instantiate(chain_dual, chain_lie_fixture):
    """Test the concrete map for a sample."""
    alg = chain_dual.algebra
    theta = chain_lie_fixture.instantiate(alg, 'beta', {'k1': '1/2', 'k2': 0, 'k3': 0})
    
    assert theta(alg.basis_element('e1')) == alg.element({'1': Fraction(1, 2), 'α*.α': 1})
    assert theta(alg.basis_element('β')) == alg.basis_element('β')
    with pytest.raises(ValueError, match="No value for parameter 'k1'"):
        chain_lie_fixture.instantiate(alg, 'beta')


def test_evaluate_plain_coefficients(a2_dual):
    """Test evaluating an image without parameters."""
    alg = a2_dual.algebra
    
    assert evaluate(alg, {'α': '3/2', '1': 1}) == alg.element({'α': Fraction(3, 2), 'e1': 1, 'e2': 1})


def test_fixture_validation():
    """Test rejection of malformed fixtures."""
    with pytest.raises(ValueError, match="missing 'images'"):
        fixture_from_dict({'name': 'x', 'quiver': 'a2.quiver'})
    with pytest.raises(ValueError, match="'variants' must be a mapping"):
        fixture_from_dict(_minimal(variants=['beta']))
    with pytest.raises(ValueError, match="'samples' must be a list"):
        fixture_from_dict(_minimal(samples={'k': 1}))
    with pytest.raises(ValueError, match="'derivation' must be true or false"):
        fixture_from_dict(_minimal(derivation='yes'))
    with pytest.raises(ValueError, match="image of 'α' must be a mapping"):
        fixture_from_dict(_minimal(images={'α': 1}))


def test_defaults():
    """Test default mode and empty sections."""
    fixture = fixture_from_dict(_minimal())
    
    assert fixture.mode == 'dual'
    assert fixture.variant_names == []
    assert fixture.samples == ()
    assert fixture.derivation is None


def test_is_fixture_file():
    """Test detection of fixture files against matrix files."""
    with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False, encoding='utf-8') as f:
        json.dump(_minimal(), f, ensure_ascii=False)
        fixture_path = f.name
    with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False, encoding='utf-8') as f:
        json.dump({'matrix': [[0]]}, f)
        matrix_path = f.name
    
    try:
        assert is_fixture_file(Path(fixture_path))
        assert not is_fixture_file(Path(matrix_path))
        assert load_fixture(Path(fixture_path)).name == 'shift'
    finally:
        os.unlink(fixture_path)
        os.unlink(matrix_path)
