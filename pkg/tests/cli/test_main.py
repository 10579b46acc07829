"""Tests for the command-line interface."""

import json
import pytest
import tempfile
import os
from pathlib import Path
from unittest.mock import patch

from src.__main__ import main
from src.cli.common import EXIT_FAILED, EXIT_INPUT_ERROR, EXIT_OK
from src.cli.decompose import parse_params
from src.corpus.manifest import DATA_DIR

STAR = str(DATA_DIR / 'star_tree.quiver')
CHAIN = str(DATA_DIR / 'chain_relation.quiver')
A2 = str(DATA_DIR / 'a2.quiver')
SINGLE = str(DATA_DIR / 'single_vertex.quiver')
FIXTURE = str(DATA_DIR / 'chain_relation_lie.yaml')


def _json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_build_json(capsys):
    """Test the structure constant dump of the star tree."""
    code, data = _json(capsys, ['build', STAR, '--json'])
    
    assert code == EXIT_OK
    assert data['dim'] == 11
    assert data['kind'] == 'dual'


def test_build_plain_and_one_point(capsys):
    """Test the other build modes."""
    code, plain = _json(capsys, ['build', STAR, '--mode', 'plain', '--json'])
    assert code == EXIT_OK
    assert plain['basis'] == ['e1', 'e2', 'e3', 'α', 'β']
    
    code, one_point = _json(capsys, ['build', A2, '--mode', 'onepoint', '--json'])
    assert one_point['dim'] == 4


def test_output_is_byte_identical(capsys):
    """Test that two runs produce the same JSON text."""
    main(['spaces', CHAIN, '--json'])
    first = capsys.readouterr().out
    main(['spaces', CHAIN, '--json'])
    second = capsys.readouterr().out
    
    assert first == second


def test_spaces_single_vertex(capsys):
    """Test the spaces of K."""
    code, data = _json(capsys, ['spaces', SINGLE, '--json'])
    
    assert code == EXIT_OK
    assert data['dimensions'] == {
        'derivations': 0, 'lie_derivations': 1, 'center': 1, 'central_annihilating': 1
    }


def test_spaces_human_output(capsys):
    """Test the human-readable spaces table."""
    assert main(['spaces', STAR]) == EXIT_OK
    out = capsys.readouterr().out
    
    assert '=== Spaces of star_tree (dual, dim 11) ===' in out
    assert 'α*.α' in out


def test_verify_with_fixture(capsys):
    """Test verification of one quiver with its map fixture."""
    code, data = _json(capsys, ['verify', CHAIN, '--map', FIXTURE, '--json'])
    
    assert code == EXIT_OK
    assert data['passed']
    fixture_records = [r for r in data['records'] if r['check'] == 'fixture-maps']
    assert fixture_records[0]['verdict'] == 'pass'
    assert all('elapsed' not in r for r in data['records'])


def test_verify_rejects_plain_mode(capsys):
    """Test that verify needs an extension."""
    assert main(['verify', STAR, '--mode', 'plain']) == EXIT_INPUT_ERROR
    assert 'use --mode dual' in capsys.readouterr().err


def test_verify_one_point_single_vertex(capsys):
    """Test the input error for a one-point extension of a single vertex."""
    assert main(['verify', SINGLE, '--mode', 'onepoint']) == EXIT_INPUT_ERROR
    assert 'at least two vertices' in capsys.readouterr().err


def test_decompose_fixture_default_variant(capsys):
    """Test decomposition of the first fixture variant with explicit parameters."""
    code, data = _json(capsys, ['decompose', '--map', FIXTURE, '--param', 'k1=1', '--param', 'k2=2',
                                '--param', 'k3=3', '--json'])
    
    assert code == EXIT_OK
    assert data['map'] == 'chain-relation-lie-derivation:beta'
    assert data['status'] == 'pass'
    assert data['unique'] is True
    assert data['central_images']['e3'] == {'e1': '3/1', 'e2': '3/1', 'e3': '3/1'}
    assert data['central_images']['α'] == {}


def test_decompose_failing_variant(capsys):
    """Test that a map that is not a Lie derivation exits with status 1."""
    code, data = _json(capsys, ['decompose', CHAIN, '--map', FIXTURE, '--variant', 'beta-star', '--json'])
    
    assert code == EXIT_FAILED
    assert data['status'] == 'fail'
    assert 'not a Lie derivation' in data['reason']


def test_decompose_matrix_file(capsys):
    """Test decomposition of a map given as a JSON matrix."""
    size = 5
    identity = [['1' if i == j else '0' for j in range(size)] for i in range(size)]
    with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False, encoding='utf-8') as f:
        json.dump({'matrix': identity}, f)
        temp_path = f.name
    
    try:
        code, data = _json(capsys, ['decompose', A2, '--map', temp_path, '--json'])
        assert code == EXIT_FAILED
        assert data['map'] == Path(temp_path).stem
    finally:
        os.unlink(temp_path)


def test_decompose_needs_quiver_for_matrix(capsys):
    """Test the input error when a matrix file comes without a quiver."""
    with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False, encoding='utf-8') as f:
        json.dump({'matrix': [['0']]}, f)
        temp_path = f.name
    
    try:
        assert main(['decompose', '--map', temp_path]) == EXIT_INPUT_ERROR
        assert 'quiver file is required' in capsys.readouterr().err
    finally:
        os.unlink(temp_path)


def test_parse_params():
    """Test NAME=VALUE parsing."""
    assert parse_params(['k1=1', ' k2 = 1/2 ']) == {'k1': '1', 'k2': '1/2'}
    assert parse_params(None) == {}
    with pytest.raises(ValueError, match="NAME=VALUE"):
        parse_params(['k1'])


def test_peirce_report(capsys):
    """Test the Peirce report of the star tree at e2 + e3."""
    code, data = _json(capsys, ['peirce', STAR, '--vertex', '2', '--vertex', '3', '--json'])
    
    assert code == EXIT_OK
    assert data['idempotent'] == ['2', '3']
    assert data['dims'] == {'A': 5, 'M': 2, 'N': 2, 'B': 2}
    assert data['pairings']['MN'] == 0
    assert 'β' in data['annihilators']['M-left']['elements']
    assert not data['annihilators']['M-left']['faithful']
    assert all(data['conditions'].values())


def test_peirce_default_idempotent(capsys):
    """Test the default view at the complement of the first source."""
    code, data = _json(capsys, ['peirce', STAR, '--json'])
    
    assert code == EXIT_OK
    assert data['idempotent'] == ['2', '3']


def test_corpus_entry(capsys):
    """Test a corpus run restricted to one entry without random quivers."""
    code, data = _json(capsys, ['corpus', '--entry', 'a2', '--no-random', '--json'])
    
    assert code == EXIT_OK
    assert {r['instance'] for r in data['records']} == {'a2/dual', 'a2/onepoint'}


def test_missing_file(capsys):
    """Test the input error for a missing quiver file."""
    assert main(['build', '/nonexistent/shape.quiver']) == EXIT_INPUT_ERROR
    assert 'Quiver file not found' in capsys.readouterr().err


def test_syntax_error_exit_code(capsys):
    """Test that DSL errors are reported with their position."""
    with tempfile.NamedTemporaryFile(mode='w', suffix='.quiver', delete=False, encoding='utf-8') as f:
        f.write("quiver {\n  vertices: 1, 2;\n  arrows:\n    α 1 -> 2;\n}")
        temp_path = f.name
    
    try:
        assert main(['build', temp_path]) == EXIT_INPUT_ERROR
        assert 'line 4' in capsys.readouterr().err
    finally:
        os.unlink(temp_path)


def test_main_reads_sys_argv(capsys):
    """Test invocation through sys.argv."""
    with patch('sys.argv', ['derivatio', 'spaces', SINGLE, '--json']):
        assert main() == EXIT_OK
    assert json.loads(capsys.readouterr().out)['dimensions']['center'] == 1


def test_malformed_map_rows_exit_code(capsys):
    """Test that a map whose rows are not lists is an input error."""
    with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False, encoding='utf-8') as f:
        json.dump({'matrix': ['0/1'] * 5}, f)
        temp_path = f.name
    
    try:
        assert main(['peirce', A2, '--map', temp_path]) == EXIT_INPUT_ERROR
        assert 'row 0 must be a list' in capsys.readouterr().err
    finally:
        os.unlink(temp_path)
