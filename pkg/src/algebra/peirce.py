"""Peirce analysis: blocks, bimodule diagnostics and block-form maps.

A map Θ on X = [A M; N B] is read in the block form

    Θ(a) = [δ1(a), a·m0; n0·a, μ1(a)]       Θ(m) = [−m·n0, τ2(m); 0, n0·m]
    Θ(n) = [−m0·n, 0; ν3(n), n·m0]           Θ(b) = [δ4(b), −m0·b; −b·n0, μ4(b)]

which every Lie derivation satisfies. Derivations additionally have
δ4 = 0 and μ1 = 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.algebra.dual_extension import DualExtensionAlgebra
from src.algebra.spaces import (
    center, central_annihilating_maps, commuting_subspace, cycle_candidates,
    derivation_space, lie_derivation_space, vertex_idempotents, w_lower_bound
)
from src.algebra.symbolic import SymbolicElement, collect_equations, collect_rows
from src.core.errors import PeirceError
from src.core.linalg import SparseRow, nullspace, solve_affine
from src.core.logging import get_logger
from src.models.algebra import Element, FiniteDimAlgebra
from src.models.linear_map import LinearMap, MapSpace, Subspace
from src.models.peirce import BLOCKS, BlockMapData, PeirceView
from src.models.report import NOT_APPLICABLE, ConditionReport


logger = get_logger('algebra.peirce')

MAX_WITNESSES = 3


@dataclass(frozen=True)
class StandardizingMaps:
    """l_A: A -> Z(A) and l_B: B -> Z(B), stored as maps on the ambient algebra."""
    l_a: LinearMap
    l_b: LinearMap


# ---------------------------------------------------------------------------
# Small sparse helpers

def _lin(*terms: Tuple[int, SparseRow]) -> SparseRow:
    """Σ sign·row."""
    result: Dict[int, Fraction] = {}
    for sign, row in terms:
        for k, v in row.items():
            result[k] = result.get(k, 0) + sign * v
    return {k: v for k, v in result.items() if v}


def _mul(alg: FiniteDimAlgebra, *factors: SparseRow) -> SparseRow:
    return reduce(alg.multiply_sparse, factors)


def _bracket(alg: FiniteDimAlgebra, x: SparseRow, y: SparseRow) -> SparseRow:
    return _lin((1, alg.multiply_sparse(x, y)), (-1, alg.multiply_sparse(y, x)))


def _show(alg: FiniteDimAlgebra, x: SparseRow) -> str:
    return alg.describe(Element.from_sparse(alg.dim, x))


def _pairs(vectors: Sequence[SparseRow], ordered: bool = True):
    for p, x in enumerate(vectors):
        for q, y in enumerate(vectors):
            if ordered or p < q:
                yield x, y


class _Condition:
    """Collects failures of one named condition."""
    
    def __init__(self, alg: FiniteDimAlgebra):
        self.alg = alg
        self.passed = True
        self.witnesses: List[str] = []
    
    def expect(self, lhs: SparseRow, rhs: SparseRow, describe: Callable[[], str]) -> None:
        if lhs == rhs:
            return
        self.passed = False
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(
                f"{describe()}: {_show(self.alg, lhs)} ≠ {_show(self.alg, rhs)}"
            )


# ---------------------------------------------------------------------------
# Views

def vertex_sum(alg: FiniteDimAlgebra, vertices: Sequence[str]) -> Element:
    """Σ e_v over the given vertices.
    
    Raises:
        PeirceError: If a vertex is unknown
    """
    result = alg.zero()
    for vertex in vertices:
        if vertex not in alg.vertex_idempotents:
            raise PeirceError(f"Unknown vertex '{vertex}'")
        result = result + alg.basis_element(alg.vertex_idempotents[vertex])
    return result


def source_complement(alg: FiniteDimAlgebra, vertex: str) -> Element:
    """1 − e_vertex."""
    return alg.unit - vertex_sum(alg, [vertex])


def _vertex_support(alg: FiniteDimAlgebra, e: Element) -> Optional[Tuple[str, ...]]:
    by_index = {i: v for v, i in alg.vertex_idempotents.items()}
    support = e.support()
    if all(i in by_index and c == 1 for i, c in support.items()):
        return tuple(v for v in alg.quiver.vertices if alg.vertex_idempotents[v] in support)
    return None


def peirce_decompose(alg: FiniteDimAlgebra, e: Element) -> PeirceView:
    """Split ``alg`` at the idempotent ``e``.
    
    When e is a sum of vertex idempotents every basis path lies in exactly
    one block and the block bases are basis vectors; otherwise the blocks are
    spanned by the projections of the basis.
    
    Raises:
        PeirceError: If e is not idempotent
    """
    if e.dim != alg.dim or alg.multiply(e, e) != e:
        raise PeirceError(f"Element {alg.describe(e)} is not an idempotent")
    support = _vertex_support(alg, e)
    if support is not None:
        inside = set(support)
        names = {(True, True): 'A', (True, False): 'M', (False, True): 'N', (False, False): 'B'}
        indices: Dict[str, List[int]] = {block: [] for block in BLOCKS}
        for index in range(alg.dim):
            key = (alg.target_of(index) in inside, alg.source_of(index) in inside)
            indices[names[key]].append(index)
        blocks = {b: Subspace(alg.dim, ({i: Fraction(1)} for i in indices[b])) for b in BLOCKS}
    else:
        draft = PeirceView(alg, e, {})
        blocks = {
            b: Subspace(alg.dim, (draft.project(b, {j: Fraction(1)}) for j in range(alg.dim)))
            for b in BLOCKS
        }
    view = PeirceView(alg, e, blocks, support)
    if sum(view.dims.values()) != alg.dim:
        raise PeirceError(f"Blocks {view.dims} do not span the algebra of dim {alg.dim}")
    logger.debug(f"Peirce view at {alg.describe(e)}: {view.dims}")
    return view


def block_closure_witness(view: PeirceView) -> Optional[str]:
    """A product of block basis elements leaving its predicted block, or None."""
    rules = {('A', 'M'): 'M', ('M', 'B'): 'M', ('N', 'A'): 'N', ('B', 'N'): 'N',
             ('M', 'N'): 'A', ('N', 'M'): 'B', ('A', 'A'): 'A', ('B', 'B'): 'B'}
    alg = view.algebra
    for (left, right), expected in rules.items():
        for x in view.basis(left):
            for y in view.basis(right):
                if not view.blocks[expected].contains(alg.multiply_sparse(x, y)):
                    return f"{_show(alg, x)} · {_show(alg, y)} is not in {expected}"
    return None


# ---------------------------------------------------------------------------
# Bimodule diagnostics

def pairing_image(view: PeirceView, side: str) -> Subspace:
    """span{m·n} ⊆ A for side 'MN', span{n·m} ⊆ B for side 'NM'."""
    if side not in ('MN', 'NM'):
        raise PeirceError(f"Pairing side must be 'MN' or 'NM', got '{side}'")
    alg = view.algebra
    first, second = view.basis(side[0]), view.basis(side[1])
    return Subspace(alg.dim, (alg.multiply_sparse(x, y) for x in first for y in second))


def _span_element(basis: Sequence[SparseRow], offset: int = 0) -> SymbolicElement:
    """Σ_t x_(offset+t) basis[t]."""
    coords: Dict[int, Dict[int, Fraction]] = {}
    for t, vector in enumerate(basis):
        for k, c in vector.items():
            coords.setdefault(k, {})[offset + t] = c
    return SymbolicElement(coords)


def _combine_basis(basis: Sequence[SparseRow], coefficients: SparseRow) -> SparseRow:
    return _lin(*((coefficients.get(t, 0), vector) for t, vector in enumerate(basis)))


# (module, side) -> (acting block, acting element written on the left)
_ANNIHILATORS = {
    ('M', 'left'): ('A', True),
    ('M', 'right'): ('B', False),
    ('N', 'left'): ('B', True),
    ('N', 'right'): ('A', False),
}


def bimodule_annihilator(view: PeirceView, module: str, side: str) -> Subspace:
    """Annihilator of M or N in the acting corner.
    
    ('M', 'left') is {a ∈ A : aM = 0}, ('M', 'right') is {b ∈ B : Mb = 0},
    ('N', 'left') is {b ∈ B : bN = 0}, ('N', 'right') is {a ∈ A : Na = 0}.
    A zero module gives the whole corner.
    """
    try:
        acting, on_left = _ANNIHILATORS[(module, side)]
    except KeyError:
        raise PeirceError(f"Unknown annihilator ({module!r}, {side!r})")
    alg = view.algebra
    basis = view.basis(acting)
    x = _span_element(basis)
    expressions = [
        x.right_mul(alg, m) if on_left else x.left_mul(alg, m) for m in view.basis(module)
    ]
    solutions = nullspace(collect_rows(expressions), len(basis))
    return Subspace(alg.dim, (_combine_basis(basis, s) for s in solutions))


def is_faithful(view: PeirceView, module: str, side: str) -> bool:
    return bimodule_annihilator(view, module, side).is_zero()


# ---------------------------------------------------------------------------
# Corners and centers

def block_center(view: PeirceView, block: str) -> Subspace:
    """Z(A) for block 'A', Z(B) for block 'B'."""
    if block not in ('A', 'B'):
        raise PeirceError(f"Block centers exist for 'A' and 'B', got '{block}'")
    basis = view.basis(block)
    if not basis:
        return Subspace(view.algebra.dim)
    return commuting_subspace(view.algebra, basis, basis)


def center_projection(view: PeirceView, block: str, z: Optional[Subspace] = None) -> Subspace:
    """π_A(Z(X)) or π_B(Z(X))."""
    z = z if z is not None else center(view.algebra)
    return Subspace(view.algebra.dim, (view.project(block, v) for v in z.basis))


def corner_algebra(view: PeirceView, block: str) -> FiniteDimAlgebra:
    """eXe (block 'A') or (1−e)X(1−e) (block 'B') as an algebra in its own right.
    
    Raises:
        PeirceError: If e is not a sum of vertex idempotents or the corner is zero
    """
    if block not in ('A', 'B'):
        raise PeirceError(f"Corner algebras exist for 'A' and 'B', got '{block}'")
    if not view.is_vertex_sum:
        raise PeirceError("Corner algebras need an idempotent that is a sum of vertex idempotents")
    alg = view.algebra
    indices = [next(iter(v)) for v in view.basis(block)]
    if not indices:
        raise PeirceError(f"Corner {block} is zero")
    position = {index: p for p, index in enumerate(indices)}
    table = {}
    for i in indices:
        for j in indices:
            row = alg.product(i, j)
            if row:
                table[(position[i], position[j])] = {position[k]: c for k, c in row.items()}
    inside = set(view.support)
    vertices = [v for v in alg.quiver.vertices if (v in inside) == (block == 'A')]
    idempotents = {v: position[alg.vertex_idempotents[v]] for v in vertices}
    name = f"{alg.name or 'X'}[{block}]"
    return FiniteDimAlgebra([alg.basis[i] for i in indices], table, idempotents, alg.quiver, name=name)


# ---------------------------------------------------------------------------
# Block form

def extract_block_data(view: PeirceView, theta: LinearMap) -> BlockMapData:
    """Read off m0, n0, δ1, τ2, ν3, μ1, δ4, μ4 from Θ.
    
    Raises:
        PeirceError: If Θ does not fit the block form (the reassembled map
            differs from Θ on some basis element)
    """
    alg = view.algebra
    if theta.dim != alg.dim:
        raise PeirceError(f"Map acts on dimension {theta.dim}, algebra has {alg.dim}")
    p = {block: view.projection(block) for block in BLOCKS}
    theta_e = theta.apply_sparse(view.e.support())
    data = BlockMapData(
        delta1=p['A'].compose(theta).compose(p['A']),
        tau2=p['M'].compose(theta).compose(p['M']),
        nu3=p['N'].compose(theta).compose(p['N']),
        mu1=p['B'].compose(theta).compose(p['A']),
        delta4=p['A'].compose(theta).compose(p['B']),
        mu4=p['B'].compose(theta).compose(p['B']),
        m0=Element.from_sparse(alg.dim, view.project('M', theta_e)),
        n0=Element.from_sparse(alg.dim, view.project('N', theta_e)),
    )
    rebuilt = reassemble(view, data)
    for j in range(alg.dim):
        if rebuilt.column(j) != theta.column(j):
            residual = _lin((1, theta.column(j)), (-1, rebuilt.column(j)))
            raise PeirceError(
                f"Map does not fit the block form at {alg.label(j)}: residual {_show(alg, residual)}"
            )
    return data


def reassemble(view: PeirceView, data: BlockMapData) -> LinearMap:
    """The map given by the block-form formula."""
    alg = view.algebra
    m0, n0 = data.m0.support(), data.n0.support()
    
    def image(j: int) -> SparseRow:
        x = {j: Fraction(1)}
        a, m, n, b = (view.project(block, x) for block in BLOCKS)
        return _lin(
            (1, data.delta1.apply_sparse(a)), (-1, _mul(alg, m, n0)),
            (-1, _mul(alg, m0, n)), (1, data.delta4.apply_sparse(b)),
            (1, _mul(alg, a, m0)), (-1, _mul(alg, m0, b)), (1, data.tau2.apply_sparse(m)),
            (1, _mul(alg, n0, a)), (-1, _mul(alg, b, n0)), (1, data.nu3.apply_sparse(n)),
            (1, data.mu1.apply_sparse(a)), (1, _mul(alg, n, m0)),
            (1, _mul(alg, n0, m)), (1, data.mu4.apply_sparse(b)),
        )
    
    return LinearMap.from_function(alg.dim, image)


def _lie_law(cond: _Condition, alg, f: LinearMap, basis: Sequence[SparseRow], label: str) -> None:
    for x, y in _pairs(basis, ordered=False):
        lhs = f.apply_sparse(_bracket(alg, x, y))
        rhs = _lin((1, _bracket(alg, f.apply_sparse(x), y)), (1, _bracket(alg, x, f.apply_sparse(y))))
        cond.expect(lhs, rhs, lambda: f"{label}([{_show(alg, x)}, {_show(alg, y)}])")


def _leibniz_law(cond: _Condition, alg, f: LinearMap, basis: Sequence[SparseRow], label: str) -> None:
    for x, y in _pairs(basis):
        lhs = f.apply_sparse(_mul(alg, x, y))
        rhs = _lin((1, _mul(alg, f.apply_sparse(x), y)), (1, _mul(alg, x, f.apply_sparse(y))))
        cond.expect(lhs, rhs, lambda: f"{label}({_show(alg, x)}·{_show(alg, y)})")


def verify_lie_block_conditions(view: PeirceView, data: BlockMapData) -> ConditionReport:
    """Check the five block conditions every Lie derivation satisfies."""
    alg = view.algebra
    A, M, N, B = (view.basis(block) for block in BLOCKS)
    d1, t2, v3, u1, d4, u4 = (data.delta1, data.tau2, data.nu3, data.mu1, data.delta4, data.mu4)
    report = ConditionReport('lie-block-conditions', dimensions=dict(view.dims))
    
    first = _Condition(alg)
    _lie_law(first, alg, d1, A, 'δ1')
    for m in M:
        for n in N:
            first.expect(
                d1.apply_sparse(_mul(alg, m, n)),
                _lin((1, d4.apply_sparse(_mul(alg, n, m))), (1, _mul(alg, t2.apply_sparse(m), n)),
                     (1, _mul(alg, m, v3.apply_sparse(n)))),
                lambda: f"δ1({_show(alg, m)}·{_show(alg, n)})"
            )
    report.add('delta1-lie-and-mn-identity', first.passed, first.witnesses)
    
    second = _Condition(alg)
    _lie_law(second, alg, u4, B, 'μ4')
    for m in M:
        for n in N:
            second.expect(
                u4.apply_sparse(_mul(alg, n, m)),
                _lin((1, u1.apply_sparse(_mul(alg, m, n))), (1, _mul(alg, n, t2.apply_sparse(m))),
                     (1, _mul(alg, v3.apply_sparse(n), m))),
                lambda: f"μ4({_show(alg, n)}·{_show(alg, m)})"
            )
    report.add('mu4-lie-and-nm-identity', second.passed, second.witnesses)
    
    third = _Condition(alg)
    for b, b2 in _pairs(B, ordered=False):
        third.expect(d4.apply_sparse(_bracket(alg, b, b2)), {},
                     lambda: f"δ4([{_show(alg, b)}, {_show(alg, b2)}])")
    for a, a2 in _pairs(A, ordered=False):
        third.expect(u1.apply_sparse(_bracket(alg, a, a2)), {},
                     lambda: f"μ1([{_show(alg, a)}, {_show(alg, a2)}])")
    for b in B:
        for a in A:
            third.expect(_bracket(alg, d4.apply_sparse(b), a), {},
                         lambda: f"[δ4({_show(alg, b)}), {_show(alg, a)}]")
    for a in A:
        for b in B:
            third.expect(_bracket(alg, u1.apply_sparse(a), b), {},
                         lambda: f"[μ1({_show(alg, a)}), {_show(alg, b)}]")
    report.add('delta4-mu1-central', third.passed, third.witnesses)
    
    fourth = _Condition(alg)
    for a in A:
        for m in M:
            fourth.expect(
                t2.apply_sparse(_mul(alg, a, m)),
                _lin((1, _mul(alg, a, t2.apply_sparse(m))), (1, _mul(alg, d1.apply_sparse(a), m)),
                     (-1, _mul(alg, m, u1.apply_sparse(a)))),
                lambda: f"τ2({_show(alg, a)}·{_show(alg, m)})"
            )
    for m in M:
        for b in B:
            fourth.expect(
                t2.apply_sparse(_mul(alg, m, b)),
                _lin((1, _mul(alg, t2.apply_sparse(m), b)), (1, _mul(alg, m, u4.apply_sparse(b))),
                     (-1, _mul(alg, d4.apply_sparse(b), m))),
                lambda: f"τ2({_show(alg, m)}·{_show(alg, b)})"
            )
    report.add('tau2-module-laws', fourth.passed, fourth.witnesses)
    
    fifth = _Condition(alg)
    for n in N:
        for a in A:
            fifth.expect(
                v3.apply_sparse(_mul(alg, n, a)),
                _lin((1, _mul(alg, v3.apply_sparse(n), a)), (1, _mul(alg, n, d1.apply_sparse(a))),
                     (-1, _mul(alg, u1.apply_sparse(a), n))),
                lambda: f"ν3({_show(alg, n)}·{_show(alg, a)})"
            )
    for b in B:
        for n in N:
            fifth.expect(
                v3.apply_sparse(_mul(alg, b, n)),
                _lin((1, _mul(alg, b, v3.apply_sparse(n))), (1, _mul(alg, u4.apply_sparse(b), n)),
                     (-1, _mul(alg, n, d4.apply_sparse(b)))),
                lambda: f"ν3({_show(alg, b)}·{_show(alg, n)})"
            )
    report.add('nu3-module-laws', fifth.passed, fifth.witnesses)
    return report


def verify_der_block_conditions(view: PeirceView, data: BlockMapData) -> ConditionReport:
    """Check the four block conditions of a derivation plus δ4 = μ1 = 0."""
    alg = view.algebra
    A, M, N, B = (view.basis(block) for block in BLOCKS)
    d1, t2, v3, u4 = data.delta1, data.tau2, data.nu3, data.mu4
    report = ConditionReport('derivation-block-conditions', dimensions=dict(view.dims))
    
    first = _Condition(alg)
    _leibniz_law(first, alg, d1, A, 'δ1')
    for m in M:
        for n in N:
            first.expect(
                d1.apply_sparse(_mul(alg, m, n)),
                _lin((1, _mul(alg, t2.apply_sparse(m), n)), (1, _mul(alg, m, v3.apply_sparse(n)))),
                lambda: f"δ1({_show(alg, m)}·{_show(alg, n)})"
            )
    report.add('delta1-derivation-and-mn-identity', first.passed, first.witnesses)
    
    second = _Condition(alg)
    _leibniz_law(second, alg, u4, B, 'μ4')
    for m in M:
        for n in N:
            second.expect(
                u4.apply_sparse(_mul(alg, n, m)),
                _lin((1, _mul(alg, n, t2.apply_sparse(m))), (1, _mul(alg, v3.apply_sparse(n), m))),
                lambda: f"μ4({_show(alg, n)}·{_show(alg, m)})"
            )
    report.add('mu4-derivation-and-nm-identity', second.passed, second.witnesses)
    
    third = _Condition(alg)
    for a in A:
        for m in M:
            third.expect(
                t2.apply_sparse(_mul(alg, a, m)),
                _lin((1, _mul(alg, a, t2.apply_sparse(m))), (1, _mul(alg, d1.apply_sparse(a), m))),
                lambda: f"τ2({_show(alg, a)}·{_show(alg, m)})"
            )
    for m in M:
        for b in B:
            third.expect(
                t2.apply_sparse(_mul(alg, m, b)),
                _lin((1, _mul(alg, t2.apply_sparse(m), b)), (1, _mul(alg, m, u4.apply_sparse(b)))),
                lambda: f"τ2({_show(alg, m)}·{_show(alg, b)})"
            )
    report.add('tau2-module-laws', third.passed, third.witnesses)
    
    fourth = _Condition(alg)
    for n in N:
        for a in A:
            fourth.expect(
                v3.apply_sparse(_mul(alg, n, a)),
                _lin((1, _mul(alg, v3.apply_sparse(n), a)), (1, _mul(alg, n, d1.apply_sparse(a)))),
                lambda: f"ν3({_show(alg, n)}·{_show(alg, a)})"
            )
    for b in B:
        for n in N:
            fourth.expect(
                v3.apply_sparse(_mul(alg, b, n)),
                _lin((1, _mul(alg, b, v3.apply_sparse(n))), (1, _mul(alg, u4.apply_sparse(b), n))),
                lambda: f"ν3({_show(alg, b)}·{_show(alg, n)})"
            )
    report.add('nu3-module-laws', fourth.passed, fourth.witnesses)
    
    shape = []
    if not data.delta4.is_zero():
        shape.append('δ4 ≠ 0')
    if not data.mu1.is_zero():
        shape.append('μ1 ≠ 0')
    report.add('no-delta4-mu1', not shape, shape)
    return report


# ---------------------------------------------------------------------------
# Standardizing maps

class _BlockUnknown:
    """An unknown linear map from a block into span(targets)."""
    
    def __init__(self, domain: Subspace, targets: Sequence[SparseRow], offset: int):
        self.domain = domain
        self.basis = domain.basis
        self.targets = list(targets)
        self.offset = offset
    
    @property
    def n_vars(self) -> int:
        return len(self.basis) * len(self.targets)
    
    def _var(self, p: int, t: int) -> int:
        return self.offset + p * len(self.targets) + t
    
    def image(self, x: SparseRow) -> SymbolicElement:
        coordinates = self.domain.coordinates(x)
        if coordinates is None:
            raise PeirceError("Element outside the block of an unknown map")
        coords: Dict[int, Dict[int, Fraction]] = {}
        for p, a in enumerate(coordinates):
            if not a:
                continue
            for t, target in enumerate(self.targets):
                var = self._var(p, t)
                for k, c in target.items():
                    slot = coords.setdefault(k, {})
                    slot[var] = slot.get(var, 0) + a * c
        return SymbolicElement(coords)
    
    def realize(self, solution: SparseRow, view: PeirceView, block: str) -> LinearMap:
        """The solved map precomposed with π_block."""
        values = [
            _lin(*((solution.get(self._var(p, t), 0), target) for t, target in enumerate(self.targets)))
            for p in range(len(self.basis))
        ]
        
        def image(j: int) -> SparseRow:
            coordinates = self.domain.coordinates(view.project(block, {j: Fraction(1)}))
            return _lin(*zip(coordinates, values))
        
        return LinearMap.from_function(view.algebra.dim, image)


def _constant(row: SparseRow) -> SymbolicElement:
    return SymbolicElement.of_constant(row)


def find_standardizing_maps(view: PeirceView, data: BlockMapData) -> Optional[StandardizingMaps]:
    """Solve for l_A: A -> Z(A) and l_B: B -> Z(B) with
    
    δ1 − l_A a derivation of A, l_A([a,a']) = 0, l_A(mn) = δ4(nm),
    l_A(a)m = mμ1(a), n·l_A(a) = μ1(a)n, and symmetrically μ4 − l_B a
    derivation of B, l_B([b,b']) = 0, l_B(nm) = μ1(mn), l_B(b)n = nδ4(b),
    m·l_B(b) = δ4(b)m.
    
    Returns:
        The canonical solution, or None when the system is infeasible
    """
    alg = view.algebra
    A, M, N, B = (view.basis(block) for block in BLOCKS)
    d1, u1, d4, u4 = data.delta1, data.mu1, data.delta4, data.mu4
    l_a = _BlockUnknown(view.blocks['A'], block_center(view, 'A').basis, 0)
    l_b = _BlockUnknown(view.blocks['B'], block_center(view, 'B').basis, l_a.n_vars)
    
    expressions: List[SymbolicElement] = []
    for x, y in _pairs(A):
        g = _lin((1, d1.apply_sparse(_mul(alg, x, y))), (-1, _mul(alg, x, d1.apply_sparse(y))),
                 (-1, _mul(alg, d1.apply_sparse(x), y)))
        expressions.append(
            l_a.image(_mul(alg, x, y)) - l_a.image(x).right_mul(alg, y)
            - l_a.image(y).left_mul(alg, x) - _constant(g)
        )
        expressions.append(l_a.image(_bracket(alg, x, y)))
    for m in M:
        for n in N:
            expressions.append(l_a.image(_mul(alg, m, n)) - _constant(d4.apply_sparse(_mul(alg, n, m))))
            expressions.append(l_b.image(_mul(alg, n, m)) - _constant(u1.apply_sparse(_mul(alg, m, n))))
    for a in A:
        for m in M:
            expressions.append(l_a.image(a).right_mul(alg, m) - _constant(_mul(alg, m, u1.apply_sparse(a))))
        for n in N:
            expressions.append(l_a.image(a).left_mul(alg, n) - _constant(_mul(alg, u1.apply_sparse(a), n)))
    for x, y in _pairs(B):
        g = _lin((1, u4.apply_sparse(_mul(alg, x, y))), (-1, _mul(alg, x, u4.apply_sparse(y))),
                 (-1, _mul(alg, u4.apply_sparse(x), y)))
        expressions.append(
            l_b.image(_mul(alg, x, y)) - l_b.image(x).right_mul(alg, y)
            - l_b.image(y).left_mul(alg, x) - _constant(g)
        )
        expressions.append(l_b.image(_bracket(alg, x, y)))
    for b in B:
        for n in N:
            expressions.append(l_b.image(b).right_mul(alg, n) - _constant(_mul(alg, n, d4.apply_sparse(b))))
        for m in M:
            expressions.append(l_b.image(b).left_mul(alg, m) - _constant(_mul(alg, d4.apply_sparse(b), m)))
    
    solution = solve_affine(collect_equations(expressions), l_a.n_vars + l_b.n_vars)
    if solution is None:
        logger.debug("Standardizing maps: infeasible")
        return None
    return StandardizingMaps(l_a.realize(solution, view, 'A'), l_b.realize(solution, view, 'B'))


def standard_parts_from_block_maps(
    view: PeirceView,
    data: BlockMapData,
    maps: StandardizingMaps
) -> Tuple[LinearMap, LinearMap]:
    """(D, h) with h = [l_A(a)+δ4(b), 0; 0, μ1(a)+l_B(b)] and D = Θ − h."""
    h = maps.l_a + data.delta4 + data.mu1 + maps.l_b
    return reassemble(view, data) - h, h


def g_defect(view: PeirceView, data: BlockMapData) -> ConditionReport:
    """Tabulate G(x, y) = δ1(xy) − xδ1(y) − δ1(x)y on A and check
    
    G(x, y) = G(y, x),
    G(x, y)m = mμ1(xy) − xmμ1(y) − ymμ1(x),
    nG(x, y) = μ1(xy)n − μ1(y)nx − μ1(x)ny.
    """
    alg = view.algebra
    A, M, N = view.basis('A'), view.basis('M'), view.basis('N')
    d1, u1 = data.delta1, data.mu1
    
    def g(x: SparseRow, y: SparseRow) -> SparseRow:
        return _lin((1, d1.apply_sparse(_mul(alg, x, y))), (-1, _mul(alg, x, d1.apply_sparse(y))),
                    (-1, _mul(alg, d1.apply_sparse(x), y)))
    
    symmetric, left, right = _Condition(alg), _Condition(alg), _Condition(alg)
    nonzero = 0
    for x, y in _pairs(A):
        gxy = g(x, y)
        nonzero += bool(gxy)
        symmetric.expect(gxy, g(y, x), lambda: f"G({_show(alg, x)}, {_show(alg, y)})")
        u_xy, u_x, u_y = (u1.apply_sparse(_mul(alg, x, y)), u1.apply_sparse(x), u1.apply_sparse(y))
        for m in M:
            left.expect(
                _mul(alg, gxy, m),
                _lin((1, _mul(alg, m, u_xy)), (-1, _mul(alg, x, m, u_y)), (-1, _mul(alg, y, m, u_x))),
                lambda: f"G({_show(alg, x)}, {_show(alg, y)})·{_show(alg, m)}"
            )
        for n in N:
            right.expect(
                _mul(alg, n, gxy),
                _lin((1, _mul(alg, u_xy, n)), (-1, _mul(alg, u_y, n, x)), (-1, _mul(alg, u_x, n, y))),
                lambda: f"{_show(alg, n)}·G({_show(alg, x)}, {_show(alg, y)})"
            )
    report = ConditionReport('g-map', dimensions={'nonzero_pairs': nonzero})
    report.add('g-symmetric', symmetric.passed, symmetric.witnesses)
    report.add('g-m-identity', left.passed, left.witnesses)
    report.add('g-n-identity', right.passed, right.witnesses)
    return report


# ---------------------------------------------------------------------------
# Statements about whole extensions

def source_cycle_space_check(
    dx: DualExtensionAlgebra,
    vertex: str,
    theta: LinearMap,
    z: Optional[Subspace] = None
) -> ConditionReport:
    """Θ(p) ∈ Z for every basis cycle p at a source vertex with p² = 0.
    
    Raises:
        PeirceError: If ``vertex`` is not a source of the underlying quiver
    """
    if vertex not in dx.source_quiver.sources():
        raise PeirceError(f"Vertex '{vertex}' is not a source")
    alg = dx.algebra
    z = z if z is not None else center(alg)
    cycles = [i for i in cycle_candidates(alg) if alg.source_of(i) == vertex]
    condition = _Condition(alg)
    for index in cycles:
        image = theta.column(index)
        if not z.contains(image):
            condition.passed = False
            if len(condition.witnesses) < MAX_WITNESSES:
                condition.witnesses.append(f"Θ({alg.label(index)}) = {_show(alg, image)} is not central")
    report = ConditionReport('source-cycle-centrality', dimensions={'cycles': len(cycles)})
    report.add('images-central', condition.passed, condition.witnesses)
    return report


def standard_span_contains(lie: MapSpace, der: MapSpace, central: MapSpace) -> Optional[LinearMap]:
    """A Lie derivation basis element outside Der + central maps, or None."""
    combined = MapSpace(lie.ambient_dim, der.basis + central.basis)
    for theta in lie.basis:
        if not combined.contains(theta):
            return theta
    return None


def one_point_derivation_shape(view: PeirceView, der: MapSpace) -> ConditionReport:
    """Every derivation has μ4 = δ4 = μ1 = 0 at the view's idempotent."""
    report = ConditionReport('one-point-derivation-shape', dimensions={'derivations': der.dim})
    failures = []
    for k, theta in enumerate(der.basis):
        data = extract_block_data(view, theta)
        for name in ('mu4', 'delta4', 'mu1'):
            if not getattr(data, name).is_zero() and len(failures) < MAX_WITNESSES:
                failures.append(f"basis derivation {k}: {name} ≠ 0")
    report.add('mu4-delta4-mu1-vanish', not failures, failures)
    return report


def _corner_standard(corner: FiniteDimAlgebra) -> bool:
    z = center(corner)
    return standard_span_contains(
        lie_derivation_space(corner), derivation_space(corner), central_annihilating_maps(corner, z)
    ) is None


def zero_pairing_criterion(
    view: PeirceView,
    lie: MapSpace,
    der: MapSpace,
    central: MapSpace
) -> ConditionReport:
    """Zero pairings + W⁻(corner) = corner + standard corners ⇒ every Lie derivation is standard.
    
    Reported as not-applicable when a hypothesis fails.
    """
    report = ConditionReport('zero-pairing-criterion')
    zero_pairings = pairing_image(view, 'MN').is_zero() and pairing_image(view, 'NM').is_zero()
    report.add('pairings-zero', zero_pairings)
    for block in ('A', 'B'):
        if view.dim(block) == 0:
            report.add(f'corner-{block}-generated', True)
            report.add(f'corner-{block}-standard', True)
            continue
        corner = corner_algebra(view, block)
        report.add(f'corner-{block}-generated', w_lower_bound(corner, vertex_idempotents(corner)).is_whole())
        report.add(f'corner-{block}-standard', _corner_standard(corner))
    if not report.passed:
        report.status = NOT_APPLICABLE
        report.reason = ', '.join(r.name for r in report.failures())
        return report
    outside = standard_span_contains(lie, der, central)
    report.add('lie-derivations-standard', outside is None,
               [] if outside is None else ['a Lie derivation basis element is not standard'])
    return report


def faithful_criterion(
    view: PeirceView,
    lie: MapSpace,
    der: MapSpace,
    central: MapSpace,
    z: Optional[Subspace] = None
) -> ConditionReport:
    """M faithful on both sides + π_A(Z) = Z(A) + π_B(Z) = Z(B) ⇒ every Lie derivation is standard.
    
    Reported as not-applicable when a hypothesis fails.
    """
    z = z if z is not None else center(view.algebra)
    report = ConditionReport('faithful-criterion')
    report.add('m-faithful-left', is_faithful(view, 'M', 'left'))
    report.add('m-faithful-right', is_faithful(view, 'M', 'right'))
    for block in ('A', 'B'):
        projected = center_projection(view, block, z)
        block_z = block_center(view, block)
        same = projected.contains_space(block_z) and block_z.contains_space(projected)
        report.add(f'center-projects-onto-{block}', same)
    if not report.passed:
        report.status = NOT_APPLICABLE
        report.reason = ', '.join(r.name for r in report.failures())
        return report
    outside = standard_span_contains(lie, der, central)
    report.add('lie-derivations-standard', outside is None,
               [] if outside is None else ['a Lie derivation basis element is not standard'])
    return report
