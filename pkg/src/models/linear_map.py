"""Linear maps on an algebra, spaces of maps and subspaces of vectors.

A ``LinearMap`` is stored by columns: column ``j`` is the image of basis
element ``j`` as a sparse row. Spaces of maps are handled through the
column-major flattening ``var(i, j) = j * dim + i`` (coordinate ``i`` of
the image of ``b_j``), the same numbering the constraint builders use.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.linalg import RowReducer, SparseRow, clean_row, rank, to_dense
from src.models.algebra import Element


class LinearMap:
    """A square matrix of exact rationals acting on an algebra's basis.
    
    Attributes:
        dim: Dimension of the algebra the map acts on
    """
    
    def __init__(self, dim: int, columns: Sequence[SparseRow]):
        """Initialize a map from its columns.
        
        Args:
            dim: Dimension of the algebra
            columns: columns[j] is the image of basis element j as a sparse row
            
        Raises:
            ValueError: If the number of columns or an index does not match dim
        """
        if len(columns) != dim:
            raise ValueError(f"Expected {dim} columns, got {len(columns)}")
        self.dim = dim
        self._columns: Tuple[SparseRow, ...] = tuple(clean_row(c) for c in columns)
        for j, column in enumerate(self._columns):
            for i in column:
                if not 0 <= i < dim:
                    raise ValueError(f"Column {j} has coordinate {i} outside 0..{dim - 1}")
    
    @classmethod
    def zero(cls, dim: int) -> 'LinearMap':
        return cls(dim, [{} for _ in range(dim)])
    
    @classmethod
    def identity(cls, dim: int) -> 'LinearMap':
        return cls(dim, [{j: Fraction(1)} for j in range(dim)])
    
    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Fraction]]) -> 'LinearMap':
        """Map from a dense matrix; ``rows[i][j]`` is coordinate i of the image of b_j."""
        dim = len(rows)
        for row in rows:
            if len(row) != dim:
                raise ValueError(f"Matrix is not square: row of length {len(row)} in a {dim}-row matrix")
        return cls(dim, [{i: Fraction(rows[i][j]) for i in range(dim) if rows[i][j]} for j in range(dim)])
    
    @classmethod
    def from_function(cls, dim: int, image: Callable[[int], SparseRow]) -> 'LinearMap':
        """Map whose column j is ``image(j)``."""
        return cls(dim, [image(j) for j in range(dim)])
    
    @classmethod
    def from_vector(cls, dim: int, vector: SparseRow) -> 'LinearMap':
        """Inverse of ``to_vector``."""
        columns: List[Dict[int, Fraction]] = [{} for _ in range(dim)]
        for var, value in vector.items():
            j, i = divmod(var, dim)
            columns[j][i] = value
        return cls(dim, columns)
    
    def column(self, j: int) -> SparseRow:
        """Image of basis element j."""
        return self._columns[j]
    
    @property
    def columns(self) -> Tuple[SparseRow, ...]:
        return self._columns
    
    def apply_sparse(self, x: SparseRow) -> SparseRow:
        result: Dict[int, Fraction] = {}
        for j, a in x.items():
            for i, c in self._columns[j].items():
                result[i] = result.get(i, 0) + a * c
        return {i: v for i, v in result.items() if v}
    
    def apply(self, x: Element) -> Element:
        if x.dim != self.dim:
            raise ValueError(f"Dimension mismatch: map on {self.dim}, element of {x.dim}")
        return Element.from_sparse(self.dim, self.apply_sparse(x.support()))
    
    def __call__(self, x: Element) -> Element:
        return self.apply(x)
    
    def _check(self, other: 'LinearMap') -> None:
        if self.dim != other.dim:
            raise ValueError(f"Dimension mismatch: {self.dim} vs {other.dim}")
    
    def __add__(self, other: 'LinearMap') -> 'LinearMap':
        self._check(other)
        return LinearMap(self.dim, [_add(a, b, 1) for a, b in zip(self._columns, other._columns)])
    
    def __sub__(self, other: 'LinearMap') -> 'LinearMap':
        self._check(other)
        return LinearMap(self.dim, [_add(a, b, -1) for a, b in zip(self._columns, other._columns)])
    
    def __neg__(self) -> 'LinearMap':
        return self.scale(-1)
    
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.dim == other.dim and self._columns == other._columns
    
    def __hash__(self) -> int:
        return hash((self.dim, tuple(tuple(sorted(c.items())) for c in self._columns)))
    
    def scale(self, factor) -> 'LinearMap':
        factor = Fraction(factor)
        return LinearMap(self.dim, [{i: factor * c for i, c in col.items()} for col in self._columns])
    
    def compose(self, other: 'LinearMap') -> 'LinearMap':
        """self ∘ other."""
        self._check(other)
        return LinearMap(self.dim, [self.apply_sparse(col) for col in other._columns])
    
    def is_zero(self) -> bool:
        return not any(self._columns)
    
    def to_vector(self) -> SparseRow:
        """Column-major flattening; inverse of ``from_vector``."""
        return {j * self.dim + i: c for j, col in enumerate(self._columns) for i, c in col.items()}
    
    def matrix(self) -> List[List[Fraction]]:
        """Dense rows: ``matrix()[i][j]`` is coordinate i of the image of b_j."""
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j, col in enumerate(self._columns):
            for i, c in col.items():
                rows[i][j] = c
        return rows
    
    def __repr__(self) -> str:
        nonzero = sum(len(c) for c in self._columns)
        return f"<LinearMap dim={self.dim} nonzero={nonzero}>"


def _add(a: SparseRow, b: SparseRow, sign: int) -> SparseRow:
    result = dict(a)
    for k, v in b.items():
        value = result.get(k, 0) + sign * v
        if value:
            result[k] = value
        else:
            result.pop(k, None)
    return result


class Subspace:
    """A subspace of K^n held as reduced row echelon rows.
    
    Attributes:
        ambient_dim: n
        pivots: Pivot column of each basis row, increasing
    """
    
    def __init__(self, ambient_dim: int, vectors: Iterable[SparseRow] = ()):
        self.ambient_dim = ambient_dim
        self._reducer = RowReducer()
        for vector in vectors:
            self._reducer.add(vector)
        self._rref = self._reducer.rref()
        self.pivots: List[int] = list(self._rref)
    
    @classmethod
    def whole(cls, ambient_dim: int) -> 'Subspace':
        return cls(ambient_dim, ({i: Fraction(1)} for i in range(ambient_dim)))
    
    @property
    def dim(self) -> int:
        return len(self.pivots)
    
    @property
    def basis(self) -> List[SparseRow]:
        """RREF basis rows in pivot order."""
        return [dict(row) for row in self._rref.values()]
    
    def is_zero(self) -> bool:
        return self.dim == 0
    
    def is_whole(self) -> bool:
        return self.dim == self.ambient_dim
    
    def contains(self, vector: SparseRow) -> bool:
        return self._reducer.contains(vector)
    
    def contains_space(self, other: 'Subspace') -> bool:
        return all(self.contains(v) for v in other.basis)
    
    def coordinates(self, vector: SparseRow) -> Optional[List[Fraction]]:
        """Coordinates in the RREF basis, read off at the pivots; None if outside."""
        if not self.contains(vector):
            return None
        return [Fraction(vector.get(p, 0)) for p in self.pivots]
    
    def witness_outside(self, other: 'Subspace') -> Optional[SparseRow]:
        """A basis vector of ``other`` not in this space, if any."""
        for vector in other.basis:
            if not self.contains(vector):
                return vector
        return None
    
    def sum(self, other: 'Subspace') -> 'Subspace':
        return Subspace(self.ambient_dim, self.basis + other.basis)
    
    def intersection(self, other: 'Subspace') -> 'Subspace':
        """U ∩ V from the kernel of [U | −V]."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("Subspaces live in different ambient spaces")
        left, right = self.basis, other.basis
        if not left or not right:
            return Subspace(self.ambient_dim)
        # unknowns: coefficients of left (0..len(left)-1) then of right
        columns: Dict[int, Dict[int, Fraction]] = {}
        for k, vector in enumerate(left):
            for i, c in vector.items():
                columns.setdefault(i, {})[k] = c
        for k, vector in enumerate(right):
            for i, c in vector.items():
                columns.setdefault(i, {})[len(left) + k] = -c
        reducer = RowReducer()
        for row in columns.values():
            reducer.add(row)
        vectors = []
        for solution in reducer.nullspace(len(left) + len(right)):
            combined: Dict[int, Fraction] = {}
            for k, a in solution.items():
                if k < len(left):
                    for i, c in left[k].items():
                        combined[i] = combined.get(i, 0) + a * c
            vectors.append(combined)
        return Subspace(self.ambient_dim, vectors)
    
    def to_dense(self) -> List[List[Fraction]]:
        return [to_dense(row, self.ambient_dim) for row in self.basis]
    
    def __repr__(self) -> str:
        return f"<Subspace dim={self.dim} of {self.ambient_dim}>"


class MapSpace:
    """A space of linear maps on a ``dim``-dimensional algebra.
    
    The basis is the RREF basis of the flattened maps, so it is canonical
    and linear independence is certified by construction.
    """
    
    def __init__(self, dim: int, maps: Iterable[LinearMap] = (), vectors: Iterable[SparseRow] = ()):
        self.ambient_dim = dim
        flattened = [m.to_vector() for m in maps] + list(vectors)
        self.subspace = Subspace(dim * dim, flattened)
        self.basis: List[LinearMap] = [LinearMap.from_vector(dim, v) for v in self.subspace.basis]
    
    @property
    def dim(self) -> int:
        return self.subspace.dim
    
    def contains(self, theta: LinearMap) -> bool:
        return self.subspace.contains(theta.to_vector())
    
    def contains_space(self, other: 'MapSpace') -> bool:
        return self.subspace.contains_space(other.subspace)
    
    def intersection(self, other: 'MapSpace') -> 'MapSpace':
        return MapSpace(self.ambient_dim, vectors=self.subspace.intersection(other.subspace).basis)
    
    def combined_rank(self, other: 'MapSpace') -> int:
        """dim(self + other)."""
        return rank(self.subspace.basis + other.subspace.basis)
    
    def __repr__(self) -> str:
        return f"<MapSpace dim={self.dim} on K^{self.ambient_dim}>"
