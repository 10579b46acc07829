"""Peirce views and block map data.

For an idempotent e of X with f = 1 − e the four blocks are

    A = eXe    M = eXf
    N = fXe    B = fXf

and every x ∈ X splits uniquely as a + m + n + b.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.core.linalg import SparseRow
from src.models.algebra import Element, FiniteDimAlgebra
from src.models.linear_map import LinearMap, Subspace

BLOCKS = ('A', 'M', 'N', 'B')

# block -> (left factor, right factor); True stands for e, False for 1 − e
_FACTORS = {'A': (True, True), 'M': (True, False), 'N': (False, True), 'B': (False, False)}


@dataclass(frozen=True)
class PeirceView:
    """The Peirce decomposition of an algebra at an idempotent.
    
    Attributes:
        algebra: The ambient algebra
        e: The idempotent
        blocks: Block name -> subspace of the ambient algebra
        support: Vertices of e when e is a sum of vertex idempotents, else None
    """
    algebra: FiniteDimAlgebra
    e: Element
    blocks: Dict[str, Subspace]
    support: Optional[Tuple[str, ...]] = None
    
    @property
    def complement(self) -> Element:
        """1 − e."""
        return self.algebra.unit - self.e
    
    @property
    def is_vertex_sum(self) -> bool:
        return self.support is not None
    
    def project(self, block: str, x: SparseRow) -> SparseRow:
        """π_block(x), e.g. π_M(x) = e x (1 − e)."""
        left, right = _FACTORS[block]
        alg = self.algebra
        e, f = self.e.support(), self.complement.support()
        return alg.multiply_sparse(alg.multiply_sparse(e if left else f, x), e if right else f)
    
    def projection(self, block: str) -> LinearMap:
        """π_block as a map on the ambient algebra."""
        return LinearMap.from_function(
            self.algebra.dim, lambda j: self.project(block, {j: 1})
        )
    
    def basis(self, block: str) -> List[SparseRow]:
        return self.blocks[block].basis
    
    def dim(self, block: str) -> int:
        return self.blocks[block].dim
    
    @property
    def dims(self) -> Dict[str, int]:
        return {block: self.blocks[block].dim for block in BLOCKS}
    
    def basis_labels(self, block: str) -> List[str]:
        alg = self.algebra
        return [alg.describe(Element.from_sparse(alg.dim, v)) for v in self.basis(block)]


@dataclass(frozen=True)
class BlockMapData:
    """Components of a map in block form.
    
    Each component is stored as a map on the ambient algebra already
    composed with the projections, e.g. ``delta1 = π_A ∘ Θ ∘ π_A`` and
    ``mu1 = π_B ∘ Θ ∘ π_A``.
    """
    delta1: LinearMap
    tau2: LinearMap
    nu3: LinearMap
    mu1: LinearMap
    delta4: LinearMap
    mu4: LinearMap
    m0: Element
    n0: Element
    
    def components(self) -> Dict[str, LinearMap]:
        return {
            'delta1': self.delta1, 'tau2': self.tau2, 'nu3': self.nu3,
            'mu1': self.mu1, 'delta4': self.delta4, 'mu4': self.mu4,
        }
