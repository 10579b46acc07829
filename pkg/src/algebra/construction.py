"""Quotient path algebras K(Γ, ρ) = KΓ/⟨ρ⟩ with exact structure constants.

Relations are homogeneous, so the ideal is graded and every length can be
treated separately. Paths containing a monomial relation are discarded
while paths are enumerated; the remaining (non-monomial) relations are
handled by row reduction per (length, source, target) block, with pivots
in canonical path order. Non-pivot paths form the basis; each pivot path
is rewritten through its reduced row.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from src.core.errors import ConstructionError
from src.core.linalg import RowReducer
from src.core.logging import get_logger
from src.models.algebra import FiniteDimAlgebra
from src.models.quiver import Path, Quiver, Relation


logger = get_logger('algebra.construction')

BlockKey = Tuple[int, str, str]  # (length, source, target)


class _QuotientBuilder:
    """Degree-by-degree reduction of the path space modulo the relations."""
    
    def __init__(self, quiver: Quiver, length_bound: int):
        self.quiver = quiver
        self.length_bound = length_bound
        self.monomials: Set[Tuple[str, ...]] = {
            r.terms[0][1].arrows for r in quiver.relations if r.is_monomial
        }
        self.monomial_lengths = sorted({len(m) for m in self.monomials})
        self.linear_relations: List[Relation] = [r for r in quiver.relations if not r.is_monomial]
        # alive paths by length, then by (source, target)
        self.alive: Dict[int, List[Path]] = {}
        self.blocks: Dict[BlockKey, List[Path]] = defaultdict(list)
        # normal forms: path -> {basis path: coefficient}
        self.normal_forms: Dict[Path, Dict[Path, Fraction]] = {}
    
    def _starts_with_monomial(self, arrows: Tuple[str, ...]) -> bool:
        for length in self.monomial_lengths:
            if length > len(arrows):
                break
            if arrows[:length] in self.monomials:
                return True
        return False
    
    def is_alive(self, path: Path) -> bool:
        """True iff no subpath is a monomial relation."""
        arrows = path.arrows
        return not any(
            self._starts_with_monomial(arrows[start:]) for start in range(len(arrows))
        )
    
    def enumerate_alive(self) -> None:
        q = self.quiver
        layer = [Path.trivial(v) for v in q.vertices]
        self.alive[0] = layer
        for length in range(1, self.length_bound + 2):
            extended = []
            for path in layer:
                for arrow in q.arrows_from(q.target_of(path)):
                    arrows = (arrow.name,) + path.arrows
                    # only subpaths starting at the new arrow can be new monomials
                    if not self._starts_with_monomial(arrows):
                        extended.append(Path(arrows))
            self.alive[length] = extended
            layer = extended
        for length, paths in self.alive.items():
            for path in paths:
                self.blocks[(length, q.source_of(path), q.target_of(path))].append(path)
        for paths in self.blocks.values():
            paths.sort(key=q.path_key)
    
    def _paths_between(self, length: int, source: str, target: str) -> List[Path]:
        return self.blocks.get((length, source, target), [])
    
    def _generators(self, length: int) -> Iterable[Dict[Path, Fraction]]:
        """Images of u·r·v of the given length for non-monomial relations r."""
        q = self.quiver
        for relation in self.linear_relations:
            k = relation.length
            if k > length:
                continue
            r_source = q.source_of(relation.paths[0])
            r_target = q.target_of(relation.paths[0])
            for a in range(length - k + 1):
                b = length - k - a
                lefts = [u for u in self.alive.get(a, []) if q.source_of(u) == r_target]
                rights = [v for v in self.alive.get(b, []) if q.target_of(v) == r_source]
                for u in lefts:
                    for v in rights:
                        vector: Dict[Path, Fraction] = {}
                        for coefficient, p in relation.terms:
                            w = u.then(p).then(v)
                            if self.is_alive(w):
                                vector[w] = vector.get(w, Fraction(0)) + coefficient
                        vector = {w: c for w, c in vector.items() if c}
                        if vector:
                            yield vector
    
    def reduce(self) -> None:
        q = self.quiver
        for length in range(self.length_bound + 2):
            generators_by_block: Dict[Tuple[str, str], List[Dict[Path, Fraction]]] = defaultdict(list)
            for vector in self._generators(length):
                some = next(iter(vector))
                generators_by_block[(q.source_of(some), q.target_of(some))].append(vector)
            for (block_length, source, target), paths in self.blocks.items():
                if block_length != length:
                    continue
                position = {p: n for n, p in enumerate(paths)}
                reducer = RowReducer()
                for vector in generators_by_block.get((source, target), []):
                    reducer.add({position[w]: c for w, c in vector.items()})
                reduced = reducer.rref()
                for n, path in enumerate(paths):
                    if n in reduced:
                        self.normal_forms[path] = {
                            paths[col]: -coef for col, coef in reduced[n].items() if col != n
                        }
                    else:
                        self.normal_forms[path] = {path: Fraction(1)}
    
    def basis_paths(self) -> List[Path]:
        return sorted(
            (p for p, form in self.normal_forms.items()
             if p.length <= self.length_bound and form == {p: Fraction(1)}),
            key=self.quiver.path_key
        )
    
    def overflow(self) -> List[Path]:
        """Basis paths of length bound + 1 (must be empty)."""
        return [
            p for p in self.alive.get(self.length_bound + 1, [])
            if self.normal_forms.get(p) == {p: Fraction(1)}
        ]
    
    def normal_form(self, path: Path) -> Dict[Path, Fraction]:
        if path.length > self.length_bound or not self.is_alive(path):
            return {}
        return self.normal_forms[path]


def build_path_algebra(
    quiver: Quiver,
    relations: Sequence[Relation] = (),
    length_bound: int = 1,
    name: str = None
) -> FiniteDimAlgebra:
    """Build K(Γ, ρ) with a basis of path representatives.
    
    Args:
        quiver: The quiver Γ (its own relations are replaced by ``relations``)
        relations: The relation set ρ; homogeneous relations over ``quiver``
        length_bound: Longest path length that may survive in the quotient
        name: Optional display name of the algebra
        
    Returns:
        The finite-dimensional algebra
        
    Raises:
        ConstructionError: If some path of length ``length_bound + 1`` survives
            (finite-dimensionality not certified within the bound)
        QuiverError: If a relation is invalid over the quiver
    """
    if length_bound < 1:
        raise ConstructionError(f"length_bound must be a positive integer, got {length_bound}")
    q = quiver.with_relations(relations)
    builder = _QuotientBuilder(q, length_bound)
    builder.enumerate_alive()
    builder.reduce()
    overflow = builder.overflow()
    if overflow:
        raise ConstructionError(
            f"Algebra is not finite-dimensional within bound {length_bound}: "
            f"{overflow[0].label} survives"
        )
    basis = builder.basis_paths()
    index = {p: n for n, p in enumerate(basis)}
    table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for i, left in enumerate(basis):
        for j, right in enumerate(basis):
            if q.target_of(right) != q.source_of(left):
                continue
            form = builder.normal_form(left.then(right))
            if form:
                table[(i, j)] = {index[p]: c for p, c in form.items()}
    vertex_idempotents = {v: index[Path.trivial(v)] for v in q.vertices}
    logger.debug(
        f"Built path algebra{' ' + name if name else ''}: dim {len(basis)}, "
        f"{len(q.arrows)} arrows, {len(q.relations)} relations, bound {length_bound}"
    )
    return FiniteDimAlgebra(basis, table, vertex_idempotents, q, name=name)
