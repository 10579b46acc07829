"""Shared fixtures: bundled quivers and their extensions, built once per session."""

import pytest

from src.algebra.dual_extension import build_dual_extension, build_one_point_extension
from src.corpus.manifest import DATA_DIR
from src.parsing.quiver_dsl import parse_quiver_file
from src.persistence.fixtures import load_fixture


def _quiver(name):
    return parse_quiver_file(DATA_DIR / f"{name}.quiver")


@pytest.fixture(scope='session')
def star_tree():
    return _quiver('star_tree')


@pytest.fixture(scope='session')
def triangle():
    return _quiver('triangle')


@pytest.fixture(scope='session')
def chain_relation():
    return _quiver('chain_relation')


@pytest.fixture(scope='session')
def a2():
    return _quiver('a2')


@pytest.fixture(scope='session')
def single_vertex():
    return _quiver('single_vertex')


@pytest.fixture(scope='session')
def star_dual(star_tree):
    return build_dual_extension(star_tree)


@pytest.fixture(scope='session')
def triangle_dual(triangle):
    return build_dual_extension(triangle)


@pytest.fixture(scope='session')
def chain_dual(chain_relation):
    return build_dual_extension(chain_relation)


@pytest.fixture(scope='session')
def a2_dual(a2):
    return build_dual_extension(a2)


@pytest.fixture(scope='session')
def a2_onepoint(a2):
    return build_one_point_extension(a2)


@pytest.fixture(scope='session')
def star_onepoint(star_tree):
    return build_one_point_extension(star_tree)


@pytest.fixture(scope='session')
def single_dual(single_vertex):
    return build_dual_extension(single_vertex)


@pytest.fixture(scope='session')
def chain_lie_fixture():
    return load_fixture(DATA_DIR / 'chain_relation_lie.yaml')
