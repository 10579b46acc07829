"""Finite-dimensional algebras given by structure constants."""

from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.core.errors import ConstructionError
from src.core.linalg import SparseRow
from src.core.logging import get_logger
from src.core.rational import to_scalar
from src.models.quiver import Path, Quiver


logger = get_logger('models.algebra')

UNIT_LABEL = '1'

Table = Dict[Tuple[int, int], Dict[int, Fraction]]


@dataclass(frozen=True)
class Element:
    """Coefficient vector over the canonical basis of an algebra."""
    coeffs: Tuple[Fraction, ...]
    
    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(Fraction(c) for c in self.coeffs))
    
    @classmethod
    def zero(cls, dim: int) -> 'Element':
        return cls((Fraction(0),) * dim)
    
    @classmethod
    def basis(cls, dim: int, index: int) -> 'Element':
        coeffs = [Fraction(0)] * dim
        coeffs[index] = Fraction(1)
        return cls(tuple(coeffs))
    
    @classmethod
    def from_sparse(cls, dim: int, row: Mapping[int, Fraction]) -> 'Element':
        coeffs = [Fraction(0)] * dim
        for index, value in row.items():
            coeffs[index] += value
        return cls(tuple(coeffs))
    
    @property
    def dim(self) -> int:
        return len(self.coeffs)
    
    def support(self) -> SparseRow:
        """Nonzero coordinates as a sparse row."""
        return {i: c for i, c in enumerate(self.coeffs) if c}
    
    def is_zero(self) -> bool:
        return not any(self.coeffs)
    
    def _check(self, other: 'Element') -> None:
        if self.dim != other.dim:
            raise ValueError(f"Dimension mismatch: {self.dim} vs {other.dim}")
    
    def __add__(self, other: 'Element') -> 'Element':
        self._check(other)
        return Element(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
    
    def __sub__(self, other: 'Element') -> 'Element':
        self._check(other)
        return Element(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))
    
    def __neg__(self) -> 'Element':
        return Element(tuple(-a for a in self.coeffs))
    
    def scale(self, factor: Union[int, Fraction]) -> 'Element':
        factor = Fraction(factor)
        return Element(tuple(factor * a for a in self.coeffs))


class FiniteDimAlgebra:
    """An associative unital algebra with a basis of path labels.
    
    Attributes:
        basis: Basis paths in canonical order
        dim: Dimension
        quiver: Quiver whose paths label the basis (endpoints of basis paths)
        vertex_idempotents: vertex -> basis index of e_vertex
        unit: Sum of the vertex idempotents
    """
    
    def __init__(
        self,
        basis: Sequence[Path],
        table: Mapping[Tuple[int, int], Mapping[int, Fraction]],
        vertex_idempotents: Mapping[str, int],
        quiver: Quiver,
        verify: bool = True,
        name: Optional[str] = None
    ):
        """Initialize an algebra from its structure constants.
        
        Args:
            basis: Basis paths
            table: (i, j) -> {k: c} meaning b_i·b_j = Σ c·b_k; missing pairs are zero
            vertex_idempotents: Basis index of each vertex idempotent
            quiver: Quiver labelling the basis
            verify: Run the construction self-tests (unit, idempotents, associativity)
            name: Optional display name
            
        Raises:
            ConstructionError: If a self-test fails
        """
        self.basis: Tuple[Path, ...] = tuple(basis)
        self.dim = len(self.basis)
        if self.dim == 0:
            raise ConstructionError("An algebra needs a nonempty basis")
        self.quiver = quiver
        self.name = name
        self._table: Table = {}
        for (i, j), row in table.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ConstructionError(f"Table entry ({i}, {j}) outside the basis")
            cleaned = {k: Fraction(c) for k, c in row.items() if c}
            if cleaned:
                self._table[(i, j)] = cleaned
        self.vertex_idempotents: Dict[str, int] = dict(vertex_idempotents)
        self._index = {path: i for i, path in enumerate(self.basis)}
        self._labels = {path.label: i for i, path in enumerate(self.basis)}
        self.unit = Element.from_sparse(
            self.dim, {i: Fraction(1) for i in self.vertex_idempotents.values()}
        )
        if verify:
            self._self_test()
    
    def _self_test(self) -> None:
        for vertex, i in self.vertex_idempotents.items():
            for other, j in self.vertex_idempotents.items():
                expected = {i: Fraction(1)} if i == j else {}
                if self.product(i, j) != expected:
                    raise ConstructionError(
                        f"Vertex idempotents e{vertex}, e{other} are not orthogonal idempotents"
                    )
        for i in range(self.dim):
            x = Element.basis(self.dim, i)
            if self.multiply(self.unit, x) != x or self.multiply(x, self.unit) != x:
                raise ConstructionError(f"Unit does not act as identity on {self.label(i)}")
        if not self.check_associativity():
            raise ConstructionError("Multiplication table is not associative")
    
    @property
    def table(self) -> Table:
        """Sparse structure constants (read-only view by convention)."""
        return self._table
    
    def product(self, i: int, j: int) -> Dict[int, Fraction]:
        """b_i · b_j as a sparse row."""
        return self._table.get((i, j), {})
    
    def label(self, index: int) -> str:
        return self.basis[index].label
    
    @property
    def labels(self) -> List[str]:
        return [p.label for p in self.basis]
    
    def index_of(self, key: Union[str, Path]) -> int:
        """Basis index of a path or its label."""
        try:
            if isinstance(key, Path):
                return self._index[key]
            return self._labels[key]
        except KeyError:
            raise ValueError(f"'{key}' is not a basis element")
    
    def source_of(self, index: int) -> str:
        return self.quiver.source_of(self.basis[index])
    
    def target_of(self, index: int) -> str:
        return self.quiver.target_of(self.basis[index])
    
    def basis_element(self, key: Union[int, str, Path]) -> Element:
        index = key if isinstance(key, int) else self.index_of(key)
        return Element.basis(self.dim, index)
    
    def element(self, coefficients: Mapping[str, Union[int, str, Fraction]]) -> Element:
        """Element from label -> coefficient; the label '1' denotes the unit."""
        result = Element.zero(self.dim)
        for label, value in coefficients.items():
            scalar = to_scalar(value)
            if label == UNIT_LABEL:
                result = result + self.unit.scale(scalar)
            else:
                result = result + self.basis_element(label).scale(scalar)
        return result
    
    def zero(self) -> Element:
        return Element.zero(self.dim)
    
    def _check_element(self, x: Element) -> None:
        if x.dim != self.dim:
            raise ValueError(f"Dimension mismatch: element has {x.dim} coordinates, algebra has {self.dim}")
    
    def multiply_sparse(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> SparseRow:
        """Product of two sparse coordinate rows."""
        result: Dict[int, Fraction] = {}
        for i, a in x.items():
            for j, b in y.items():
                row = self._table.get((i, j))
                if not row:
                    continue
                ab = a * b
                for k, c in row.items():
                    result[k] = result.get(k, 0) + ab * c
        return {k: v for k, v in result.items() if v}
    
    def multiply(self, x: Element, y: Element) -> Element:
        """Bilinear extension of the structure constants."""
        self._check_element(x)
        self._check_element(y)
        return Element.from_sparse(self.dim, self.multiply_sparse(x.support(), y.support()))
    
    def commutator(self, x: Element, y: Element) -> Element:
        """[x, y] = xy − yx."""
        return self.multiply(x, y) - self.multiply(y, x)
    
    def check_associativity(self) -> bool:
        """True iff (b_i b_j) b_k = b_i (b_j b_k) for all basis triples."""
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.product(i, j)
                for k in range(self.dim):
                    left = self.multiply_sparse(ij, {k: Fraction(1)})
                    right = self.multiply_sparse({i: Fraction(1)}, self.product(j, k))
                    if left != right:
                        logger.debug(
                            f"Associativity fails on ({self.label(i)}, {self.label(j)}, {self.label(k)})"
                        )
                        return False
        return True
    
    def is_commutative(self) -> bool:
        return all(
            self.product(i, j) == self.product(j, i)
            for i in range(self.dim) for j in range(i + 1, self.dim)
        )
    
    def describe(self, x: Element) -> str:
        """Readable form of an element, e.g. ``2*α*.α + e1``."""
        parts = []
        for index, value in x.support().items():
            if value == 1:
                parts.append(self.label(index))
            else:
                parts.append(f"{value}*{self.label(index)}")
        return ' + '.join(parts) if parts else '0'
    
    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ''
        return f"<FiniteDimAlgebra{name} dim={self.dim}>"
