"""Data models: quivers, algebras, maps, Peirce views and reports."""

from src.models.algebra import Element, FiniteDimAlgebra
from src.models.linear_map import LinearMap, MapSpace, Subspace
from src.models.quiver import Arrow, Path, Quiver, Relation
from src.models.report import CheckRecord, ReportBundle

__all__ = [
    'Arrow', 'Path', 'Quiver', 'Relation', 'Element', 'FiniteDimAlgebra',
    'LinearMap', 'MapSpace', 'Subspace', 'CheckRecord', 'ReportBundle'
]
