"""Per-instance verification context.

The context owns one extension algebra and lazily computes everything checks
share: derivation and Lie derivation spaces, the center, central-annihilating
maps and Peirce views at every source complement. Each value is computed at
most once per instance.
"""

from functools import cached_property
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from src.algebra.dual_extension import DUAL, ONEPOINT, DualExtensionAlgebra
from src.algebra.peirce import extract_block_data, peirce_decompose, source_complement
from src.algebra.spaces import (
    center, central_annihilating_maps, commutator_subspace, decompose_standard,
    derivation_space, lie_derivation_space, StandardDecomposition
)
from src.core.linalg import SparseRow
from src.core.logging import get_logger
from src.models.algebra import Element, FiniteDimAlgebra
from src.models.linear_map import LinearMap, MapSpace, Subspace
from src.models.peirce import BlockMapData, PeirceView
from src.persistence.fixtures import MapFixture


logger = get_logger('engine.context')


class VerificationContext:
    """Everything the checks of one instance read from.
    
    Attributes:
        name: Instance name, e.g. 'star_tree/dual'
        extension: The dual or one-point extension under test
        fixtures: Map fixtures attached to this instance
        samples: Default parameter samples for fixtures without their own
    """
    
    def __init__(
        self,
        name: str,
        extension: DualExtensionAlgebra,
        fixtures: Sequence[MapFixture] = (),
        samples: Sequence[Mapping[str, Any]] = ()
    ):
        self.name = name
        self.extension = extension
        self.fixtures: List[MapFixture] = list(fixtures)
        self.samples: List[Dict[str, Any]] = [dict(s) for s in samples]
        self._block_data: Dict[Tuple[str, str, int], BlockMapData] = {}
    
    @property
    def algebra(self) -> FiniteDimAlgebra:
        return self.extension.algebra
    
    @property
    def kind(self) -> str:
        return self.extension.kind
    
    @property
    def is_dual(self) -> bool:
        return self.kind == DUAL
    
    @property
    def is_one_point(self) -> bool:
        return self.kind == ONEPOINT
    
    @cached_property
    def der(self) -> MapSpace:
        return derivation_space(self.algebra)
    
    @cached_property
    def lie(self) -> MapSpace:
        return lie_derivation_space(self.algebra)
    
    @cached_property
    def center(self) -> Subspace:
        return center(self.algebra)
    
    @cached_property
    def commutators(self) -> Subspace:
        return commutator_subspace(self.algebra)
    
    @cached_property
    def central(self) -> MapSpace:
        return central_annihilating_maps(self.algebra, self.center)
    
    @cached_property
    def views(self) -> Dict[str, PeirceView]:
        """Source vertex -> Peirce view at 1 − e_vertex, in vertex order."""
        views = {}
        for vertex in self.extension.source_quiver.sources():
            views[vertex] = peirce_decompose(self.algebra, source_complement(self.algebra, vertex))
            logger.debug(f"{self.name}: view at 1 - e{vertex} has blocks {views[vertex].dims}")
        return views
    
    @cached_property
    def decompositions(self) -> List[StandardDecomposition]:
        """Standard decomposition of every Lie derivation basis element.
        
        Raises:
            DecompositionError: If some basis element has no decomposition
        """
        return [decompose_standard(self.algebra, theta, self.der, self.central) for theta in self.lie.basis]
    
    def block_data(self, vertex: str, space: str, index: int) -> BlockMapData:
        """Block data of basis element ``index`` of 'lie' or 'der' at the view of ``vertex``.
        
        Raises:
            PeirceError: If the map does not fit the block form
        """
        key = (vertex, space, index)
        if key not in self._block_data:
            theta = self.maps(space)[index]
            self._block_data[key] = extract_block_data(self.views[vertex], theta)
        return self._block_data[key]
    
    def maps(self, space: str) -> List[LinearMap]:
        if space == 'lie':
            return self.lie.basis
        if space == 'der':
            return self.der.basis
        raise ValueError(f"Unknown map space '{space}', expected 'lie' or 'der'")
    
    def dimensions(self) -> Dict[str, int]:
        return {
            'algebra': self.algebra.dim,
            'derivations': self.der.dim,
            'lie_derivations': self.lie.dim,
            'center': self.center.dim,
            'central_annihilating': self.central.dim,
        }
    
    def sample_list(self, fixture: MapFixture) -> List[Dict[str, Any]]:
        if fixture.samples:
            return [dict(s) for s in fixture.samples]
        return self.samples or [{}]
    
    def describe(self, vector: SparseRow) -> str:
        return self.algebra.describe(Element.from_sparse(self.algebra.dim, vector))
    
    def __repr__(self) -> str:
        return f"VerificationContext({self.name}, dim={self.algebra.dim})"
