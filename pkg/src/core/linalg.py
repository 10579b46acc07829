"""Exact linear algebra over the rationals.

Rows are sparse dictionaries ``{column: Fraction}`` with zero entries
omitted. ``RowReducer`` performs incremental Gaussian elimination with the
pivot of each stored row at its smallest column, which keeps every result
deterministic: pivots follow column order, free columns are enumerated in
increasing order.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

SparseRow = Dict[int, Fraction]


def clean_row(row: SparseRow) -> SparseRow:
    """Return a copy of ``row`` without zero entries."""
    return {k: Fraction(v) for k, v in row.items() if v}


def to_dense(row: SparseRow, size: int) -> List[Fraction]:
    """Expand a sparse row to a dense list of length ``size``."""
    dense = [Fraction(0)] * size
    for k, v in row.items():
        dense[k] = v
    return dense


def to_sparse(values: Sequence[Fraction]) -> SparseRow:
    """Compress a dense sequence to a sparse row."""
    return {k: Fraction(v) for k, v in enumerate(values) if v}


class RowReducer:
    """Incremental sparse row echelon form.
    
    Each stored row is normalised so that its pivot (smallest column) has
    coefficient 1. Rows are only fully back-reduced on demand (``rref``).
    """
    
    def __init__(self):
        self._rows: Dict[int, SparseRow] = {}
    
    @property
    def rank(self) -> int:
        """Number of independent rows added so far."""
        return len(self._rows)
    
    @property
    def pivots(self) -> List[int]:
        """Pivot columns in increasing order."""
        return sorted(self._rows)
    
    def reduce(self, row: SparseRow) -> SparseRow:
        """Reduce ``row`` against the stored rows.
        
        Returns:
            The residual row, which contains no pivot column. It is empty iff
            ``row`` lies in the span of the stored rows.
        """
        row = clean_row(row)
        while True:
            hits = [col for col in row if col in self._rows]
            if not hits:
                return row
            pivot = min(hits)
            factor = row[pivot]
            for col, coef in self._rows[pivot].items():
                value = row.get(col, 0) - factor * coef
                if value:
                    row[col] = value
                else:
                    row.pop(col, None)
    
    def add(self, row: SparseRow) -> bool:
        """Add a row.
        
        Returns:
            True if the row was independent of the stored rows
        """
        residual = self.reduce(row)
        if not residual:
            return False
        pivot = min(residual)
        inverse = 1 / residual[pivot]
        self._rows[pivot] = {col: coef * inverse for col, coef in residual.items()}
        return True
    
    def contains(self, row: SparseRow) -> bool:
        """Check whether ``row`` lies in the span of the stored rows."""
        return not self.reduce(row)
    
    def rref(self) -> Dict[int, SparseRow]:
        """Reduced row echelon form, keyed by pivot column."""
        reduced: Dict[int, SparseRow] = {}
        for pivot in sorted(self._rows, reverse=True):
            row = dict(self._rows[pivot])
            for col in [c for c in row if c != pivot and c in reduced]:
                factor = row.pop(col)
                for other, coef in reduced[col].items():
                    if other == col:
                        continue
                    value = row.get(other, 0) - factor * coef
                    if value:
                        row[other] = value
                    else:
                        row.pop(other, None)
            reduced[pivot] = row
        return {pivot: reduced[pivot] for pivot in sorted(reduced)}
    
    def basis(self) -> List[SparseRow]:
        """RREF rows ordered by pivot."""
        return list(self.rref().values())
    
    def nullspace(self, n_vars: int) -> List[SparseRow]:
        """Basis of the solution space of the homogeneous system.
        
        One vector per free column, in increasing free-column order; the
        free column carries 1 and every other free column 0.
        """
        reduced = self.rref()
        by_column: Dict[int, List[Tuple[int, Fraction]]] = defaultdict(list)
        for pivot, row in reduced.items():
            for col, coef in row.items():
                if col != pivot:
                    by_column[col].append((pivot, coef))
        vectors = []
        for free in range(n_vars):
            if free in reduced:
                continue
            vector = {free: Fraction(1)}
            for pivot, coef in by_column.get(free, ()):
                vector[pivot] = -coef
            vectors.append(vector)
        return vectors


def nullspace(rows: Iterable[SparseRow], n_vars: int) -> List[SparseRow]:
    """Nullspace basis of a homogeneous sparse system."""
    reducer = RowReducer()
    for row in rows:
        reducer.add(row)
    return reducer.nullspace(n_vars)


def span_basis(vectors: Iterable[SparseRow]) -> List[SparseRow]:
    """RREF basis of the span of ``vectors``."""
    reducer = RowReducer()
    for vector in vectors:
        reducer.add(vector)
    return reducer.basis()


def rank(vectors: Iterable[SparseRow]) -> int:
    """Rank of a family of sparse vectors."""
    reducer = RowReducer()
    for vector in vectors:
        reducer.add(vector)
    return reducer.rank


def solve_affine(
    equations: Iterable[Tuple[SparseRow, Fraction]],
    n_vars: int
) -> Optional[Dict[int, Fraction]]:
    """Solve ``sum(a_j x_j) = b`` for a family of sparse equations.
    
    Args:
        equations: Pairs (coefficient row, right-hand side)
        n_vars: Number of unknowns (columns 0..n_vars-1)
        
    Returns:
        The canonical solution (all free unknowns zero) as a sparse dict, or
        None if the system is inconsistent
    """
    augmented = n_vars
    reducer = RowReducer()
    for row, rhs in equations:
        entry = dict(row)
        if rhs:
            entry[augmented] = Fraction(rhs)
        reducer.add(entry)
    reduced = reducer.rref()
    if augmented in reduced:
        return None
    return {pivot: row[augmented] for pivot, row in reduced.items() if row.get(augmented)}


def dense_nullspace(matrix: List[List[Fraction]]) -> List[List[Fraction]]:
    """Nullspace of a dense matrix by forward elimination and back-substitution.
    
    Independent of ``RowReducer``: the pivot in each column is the entry of
    largest absolute value, and the matrix is processed in place on a copy.
    
    Returns:
        One dense vector per free column, free column set to 1
    """
    if not matrix:
        return []
    m = [list(map(Fraction, row)) for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0])
    free_vars = []
    piv_r = 0
    for piv_c in range(n_cols):
        candidates = [r for r in range(piv_r, n_rows) if m[r][piv_c] != 0]
        if not candidates:
            free_vars.append(piv_c)
            continue
        best = max(candidates, key=lambda r: abs(m[r][piv_c]))
        m[piv_r], m[best] = m[best], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                m[r][c] -= m[piv_r][c] * frp
        piv_r += 1
        if piv_r == n_rows:
            free_vars.extend(range(piv_c + 1, n_cols))
            break
    free_flags = [False] * n_cols
    for c in free_vars:
        free_flags[c] = True
    piv_cols = [c for c in range(n_cols) if not free_flags[c]]
    vectors = []
    for free in free_vars:
        sol = [Fraction(0)] * n_cols
        sol[free] = Fraction(1)
        for r in range(len(piv_cols) - 1, -1, -1):
            piv_c = piv_cols[r]
            s = Fraction(0)
            for c in range(piv_c + 1, n_cols):
                s += m[r][c] * sol[c]
            sol[piv_c] = -s / m[r][piv_c]
        vectors.append(sol)
    return vectors
