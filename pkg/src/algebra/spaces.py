"""Derivations, Lie derivations, centers and the standard decomposition.

Every space is the exact nullspace of a sparse linear system over all basis
pairs. Maps are flattened column-major (see ``LinearMap.to_vector``), so a
space of maps on a ``dim``-dimensional algebra lives in K^(dim²).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from src.algebra.dual_extension import DualExtensionAlgebra
from src.algebra.symbolic import SymbolicElement, SymbolicMap, collect_rows
from src.core.errors import DecompositionError
from src.core.linalg import RowReducer, SparseRow, nullspace, solve_affine
from src.core.logging import get_logger
from src.models.algebra import Element, FiniteDimAlgebra
from src.models.linear_map import LinearMap, MapSpace, Subspace
from src.models.report import ConditionReport


logger = get_logger('algebra.spaces')


@dataclass(frozen=True)
class StandardDecomposition:
    """Θ = D + Δ.
    
    Attributes:
        derivation_part: D, a derivation
        central_part: Δ, central-valued and zero on commutators
        unique: Whether Der ∩ central-annihilating maps is {0}
    """
    derivation_part: LinearMap
    central_part: LinearMap
    unique: bool


def _unit(index: int) -> SparseRow:
    return {index: Fraction(1)}


def _commutator(alg: FiniteDimAlgebra, i: int, j: int) -> SparseRow:
    row = dict(alg.product(i, j))
    for k, c in alg.product(j, i).items():
        value = row.get(k, 0) - c
        if value:
            row[k] = value
        else:
            row.pop(k, None)
    return row


def _derivation_defect(alg: FiniteDimAlgebra, theta: SymbolicMap, i: int, j: int) -> SymbolicElement:
    """Θ(b_i b_j) − Θ(b_i) b_j − b_i Θ(b_j)."""
    return (
        theta.image(alg.product(i, j))
        - theta.image_basis(i).right_mul(alg, _unit(j))
        - theta.image_basis(j).left_mul(alg, _unit(i))
    )


def _lie_defect(alg: FiniteDimAlgebra, theta: SymbolicMap, i: int, j: int) -> SymbolicElement:
    """Θ([b_i, b_j]) − [Θ(b_i), b_j] − [b_i, Θ(b_j)]."""
    return (
        theta.image(_commutator(alg, i, j))
        - theta.image_basis(i).bracket_right(alg, _unit(j))
        - theta.image_basis(j).bracket_left(alg, _unit(i))
    )


def _solve_space(alg: FiniteDimAlgebra, theta: SymbolicMap, rows: List[SparseRow]) -> MapSpace:
    solutions = nullspace(rows, theta.n_vars)
    return MapSpace(alg.dim, [theta.realize(s, alg.dim) for s in solutions])


def derivation_rows(alg: FiniteDimAlgebra) -> List[SparseRow]:
    """Homogeneous system of the derivation law over all basis pairs, in flattened coordinates."""
    theta = SymbolicMap.full(alg.dim)
    return collect_rows(
        _derivation_defect(alg, theta, i, j) for i in range(alg.dim) for j in range(alg.dim)
    )


def derivation_space(alg: FiniteDimAlgebra) -> MapSpace:
    """Der(alg): all Θ with Θ(ab) = Θ(a)b + aΘ(b), over all basis pairs."""
    rows = derivation_rows(alg)
    space = _solve_space(alg, SymbolicMap.full(alg.dim), rows)
    logger.debug(f"Derivation space of {alg!r}: dim {space.dim} from {len(rows)} equations")
    return space


def derivation_space_from_generators(alg: FiniteDimAlgebra) -> MapSpace:
    """Der(alg) from the pairs (g, b) and (b, g) with g a vertex idempotent or an arrow."""
    generators = [i for i, path in enumerate(alg.basis) if path.length <= 1]
    theta = SymbolicMap.full(alg.dim)
    expressions = []
    for g in generators:
        for b in range(alg.dim):
            expressions.append(_derivation_defect(alg, theta, g, b))
            expressions.append(_derivation_defect(alg, theta, b, g))
    return _solve_space(alg, theta, collect_rows(expressions))


def lie_derivation_space(alg: FiniteDimAlgebra) -> MapSpace:
    """LieDer(alg): all Θ with Θ([a,b]) = [Θ(a),b] + [a,Θ(b)]."""
    theta = SymbolicMap.full(alg.dim)
    rows = collect_rows(
        _lie_defect(alg, theta, i, j) for i in range(alg.dim) for j in range(i + 1, alg.dim)
    )
    space = _solve_space(alg, theta, rows)
    logger.debug(f"Lie derivation space of {alg!r}: dim {space.dim}")
    return space


def _commutes_rows(alg: FiniteDimAlgebra, basis: Sequence[int], against: Sequence[int]) -> List[SparseRow]:
    """Rows of x·b − b·x = 0 for x = Σ x_p b_{basis[p]} and b in ``against``."""
    rows: Dict[tuple, Dict[int, Fraction]] = {}
    for p, l in enumerate(basis):
        for i in against:
            for k, c in alg.product(l, i).items():
                rows.setdefault((i, k), {})
                rows[(i, k)][p] = rows[(i, k)].get(p, 0) + c
            for k, c in alg.product(i, l).items():
                rows.setdefault((i, k), {})
                rows[(i, k)][p] = rows[(i, k)].get(p, 0) - c
    return [{p: c for p, c in row.items() if c} for row in rows.values()]


def commuting_subspace(alg: FiniteDimAlgebra, basis: Sequence[SparseRow], against: Sequence[SparseRow]) -> Subspace:
    """Elements of span(basis) commuting with every element of ``against``."""
    x = SymbolicMap([0], basis)
    expressions = [x.image_basis(0).bracket_right(alg, y) for y in against]
    solutions = nullspace(collect_rows(expressions), x.n_vars)
    vectors = []
    for solution in solutions:
        vectors.append(x.realize(solution, alg.dim).column(0))
    return Subspace(alg.dim, vectors)


def center(alg: FiniteDimAlgebra) -> Subspace:
    """Z(alg) = {x : x b_i = b_i x for all i}."""
    solutions = nullspace(_commutes_rows(alg, range(alg.dim), range(alg.dim)), alg.dim)
    return Subspace(alg.dim, solutions)


def commutator_subspace(alg: FiniteDimAlgebra) -> Subspace:
    """[alg, alg] = span{b_i b_j − b_j b_i}."""
    return Subspace(
        alg.dim, (_commutator(alg, i, j) for i in range(alg.dim) for j in range(i + 1, alg.dim))
    )


def central_annihilating_maps(alg: FiniteDimAlgebra, z: Optional[Subspace] = None) -> MapSpace:
    """Maps alg -> Z(alg) vanishing on [alg, alg]."""
    z = z if z is not None else center(alg)
    delta = SymbolicMap(range(alg.dim), z.basis)
    rows = collect_rows(delta.image(c) for c in commutator_subspace(alg).basis)
    return _solve_space(alg, delta, rows)


def central_image_derivations(alg: FiniteDimAlgebra, z: Optional[Subspace] = None) -> MapSpace:
    """Derivations with image in Z(alg)."""
    z = z if z is not None else center(alg)
    theta = SymbolicMap(range(alg.dim), z.basis)
    rows = collect_rows(
        _derivation_defect(alg, theta, i, j) for i in range(alg.dim) for j in range(alg.dim)
    )
    return _solve_space(alg, theta, rows)


def _combine(*terms) -> SparseRow:
    """Σ sign·row for (sign, row) pairs."""
    result: Dict[int, Fraction] = {}
    for sign, row in terms:
        for k, v in row.items():
            result[k] = result.get(k, 0) + sign * v
    return {k: v for k, v in result.items() if v}


def _sub(a: SparseRow, b: SparseRow) -> SparseRow:
    return _combine((1, a), (-1, b))


def derivation_witness(alg: FiniteDimAlgebra, theta: LinearMap) -> Optional[tuple]:
    """A basis pair violating the derivation law, or None."""
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = theta.apply_sparse(alg.product(i, j))
            rhs = _combine(
                (1, alg.multiply_sparse(theta.column(i), _unit(j))),
                (1, alg.multiply_sparse(_unit(i), theta.column(j)))
            )
            if lhs != rhs:
                return (i, j)
    return None


def lie_witness(alg: FiniteDimAlgebra, theta: LinearMap) -> Optional[tuple]:
    """A basis pair violating the Lie derivation law, or None."""
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = theta.apply_sparse(_commutator(alg, i, j))
            ti, tj = theta.column(i), theta.column(j)
            rhs = _combine(
                (1, alg.multiply_sparse(ti, _unit(j))), (-1, alg.multiply_sparse(_unit(j), ti)),
                (1, alg.multiply_sparse(_unit(i), tj)), (-1, alg.multiply_sparse(tj, _unit(i)))
            )
            if lhs != rhs:
                return (i, j)
    return None


def is_derivation(alg: FiniteDimAlgebra, theta: LinearMap) -> bool:
    return derivation_witness(alg, theta) is None


def is_lie_derivation(alg: FiniteDimAlgebra, theta: LinearMap) -> bool:
    return lie_witness(alg, theta) is None


def is_central_annihilating(alg: FiniteDimAlgebra, theta: LinearMap, z: Optional[Subspace] = None) -> bool:
    """Image in Z(alg) and [alg, alg] in the kernel."""
    z = z if z is not None else center(alg)
    if not all(z.contains(theta.column(j)) for j in range(alg.dim)):
        return False
    return all(
        not theta.apply_sparse(_commutator(alg, i, j))
        for i in range(alg.dim) for j in range(i + 1, alg.dim)
    )


def inner_derivation(alg: FiniteDimAlgebra, a: Element) -> LinearMap:
    """x ↦ [a, x]."""
    row = a.support()
    return LinearMap.from_function(
        alg.dim,
        lambda j: _sub(alg.multiply_sparse(row, _unit(j)), alg.multiply_sparse(_unit(j), row))
    )


def grading_derivation(alg: FiniteDimAlgebra) -> LinearMap:
    """p ↦ length(p)·p; a derivation whenever the relations are homogeneous."""
    return LinearMap.from_function(
        alg.dim, lambda j: {j: Fraction(alg.basis[j].length)} if alg.basis[j].length else {}
    )


def decompose_standard(
    alg: FiniteDimAlgebra,
    theta: LinearMap,
    der: Optional[MapSpace] = None,
    central: Optional[MapSpace] = None
) -> StandardDecomposition:
    """Split a Lie derivation as Θ = D + Δ.
    
    Args:
        alg: The algebra
        theta: A Lie derivation of ``alg``
        der: Precomputed derivation space (computed if omitted)
        central: Precomputed central-annihilating space (computed if omitted)
        
    Returns:
        The decomposition; when it is not unique, the canonical solution of
        the coefficient system (free coefficients zero)
        
    Raises:
        DecompositionError: If Θ is not a Lie derivation or no split exists
    """
    if theta.dim != alg.dim:
        raise DecompositionError(f"Map acts on dimension {theta.dim}, algebra has {alg.dim}")
    witness = lie_witness(alg, theta)
    if witness is not None:
        i, j = witness
        raise DecompositionError(
            f"not a Lie derivation: bracket law fails on ({alg.label(i)}, {alg.label(j)})"
        )
    der = der if der is not None else derivation_space(alg)
    central = central if central is not None else central_annihilating_maps(alg)
    family = [m.to_vector() for m in der.basis] + [m.to_vector() for m in central.basis]
    # one equation per flattened coordinate: Σ c_k family_k = Θ
    by_coordinate: Dict[int, Dict[int, Fraction]] = {}
    for k, vector in enumerate(family):
        for coordinate, value in vector.items():
            by_coordinate.setdefault(coordinate, {})[k] = value
    target = theta.to_vector()
    coordinates = sorted(set(by_coordinate) | set(target))
    equations = [(by_coordinate.get(c, {}), target.get(c, Fraction(0))) for c in coordinates]
    solution = solve_affine(equations, len(family))
    if solution is None:
        raise DecompositionError("no standard decomposition exists")
    n_der = der.dim
    d_part = LinearMap.zero(alg.dim)
    c_part = LinearMap.zero(alg.dim)
    for k, value in sorted(solution.items()):
        if k < n_der:
            d_part = d_part + der.basis[k].scale(value)
        else:
            c_part = c_part + central.basis[k - n_der].scale(value)
    unique = der.combined_rank(central) == der.dim + central.dim
    return StandardDecomposition(d_part, c_part, unique)


def cycle_candidates(alg: FiniteDimAlgebra) -> List[int]:
    """Nontrivial basis paths p with s(p) = e(p) and p·p = 0."""
    result = []
    for index, path in enumerate(alg.basis):
        if path.is_trivial or alg.source_of(index) != alg.target_of(index):
            continue
        if not alg.product(index, index):
            result.append(index)
    return result


def verify_center_form(dx: DualExtensionAlgebra, z: Optional[Subspace] = None) -> ConditionReport:
    """Check Z ⊆ span({1} ∪ {cycle basis paths p with p² = 0}).
    
    Skipped for disconnected quivers or a single vertex.
    """
    quiver = dx.source_quiver
    if len(quiver.vertices) < 2:
        return ConditionReport.skipped('center-form', 'single vertex')
    if not quiver.is_connected():
        return ConditionReport.skipped('center-form', 'disconnected')
    report = ConditionReport('center-form')
    alg = dx.algebra
    z = z if z is not None else center(alg)
    candidates = cycle_candidates(alg)
    span = Subspace(alg.dim, [alg.unit.support()] + [_unit(i) for i in candidates])
    outside = span.witness_outside(z)
    witnesses = [] if outside is None else [alg.describe(Element.from_sparse(alg.dim, outside))]
    report.add('center-inside-cycle-span', outside is None, witnesses)
    report.dimensions = {'center': z.dim, 'candidate_span': span.dim}
    return report


def _closure(alg: FiniteDimAlgebra, generators: Sequence[SparseRow]) -> Subspace:
    reducer = RowReducer()
    members: List[SparseRow] = []
    queue = list(generators)
    while queue:
        vector = queue.pop(0)
        if not reducer.add(vector):
            continue
        members.append(vector)
        for other in members:
            queue.append(alg.multiply_sparse(vector, other))
            if other is not vector:
                queue.append(alg.multiply_sparse(other, vector))
    return Subspace(alg.dim, members)


def w_lower_bound(alg: FiniteDimAlgebra, idempotents: Sequence[Element]) -> Subspace:
    """Smallest product-closed subspace containing 1, the idempotents and [alg, alg].
    
    Raises:
        ValueError: If a listed element is not idempotent
    """
    for e in idempotents:
        if alg.multiply(e, e) != e:
            raise ValueError(f"Element {alg.describe(e)} is not idempotent")
    generators = [alg.unit.support()] + [e.support() for e in idempotents]
    generators += commutator_subspace(alg).basis
    return _closure(alg, generators)


def vertex_idempotents(alg: FiniteDimAlgebra) -> List[Element]:
    return [alg.basis_element(i) for i in alg.vertex_idempotents.values()]
