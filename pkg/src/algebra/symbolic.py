"""Elements whose coordinates are affine forms in unknown map entries.

Constraint systems (derivation law, bracket law, block identities) are
written as ordinary algebra expressions over ``SymbolicElement`` values;
each nonzero coordinate of the final expression becomes one equation.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.linalg import SparseRow
from src.models.algebra import FiniteDimAlgebra
from src.models.linear_map import LinearMap

LinearForm = Dict[int, Fraction]


def _accumulate(target: Dict, key, form: LinearForm, factor: Fraction) -> None:
    slot = target.setdefault(key, {})
    for var, coef in form.items():
        value = slot.get(var, 0) + factor * coef
        if value:
            slot[var] = value
        else:
            slot.pop(var, None)
    if not slot:
        del target[key]


class SymbolicElement:
    """coordinate -> linear form, plus a constant part.
    
    The represented element is ``Σ_k (form_k(x) + constant_k) b_k``.
    """
    
    def __init__(
        self,
        coords: Optional[Dict[int, LinearForm]] = None,
        constant: Optional[SparseRow] = None
    ):
        self.coords: Dict[int, LinearForm] = coords or {}
        self.constant: Dict[int, Fraction] = {k: v for k, v in (constant or {}).items() if v}
    
    @classmethod
    def of_constant(cls, row: SparseRow) -> 'SymbolicElement':
        return cls({}, dict(row))
    
    def _combine(self, other: 'SymbolicElement', sign: int) -> 'SymbolicElement':
        coords = {k: dict(v) for k, v in self.coords.items()}
        for k, form in other.coords.items():
            _accumulate(coords, k, form, Fraction(sign))
        constant = dict(self.constant)
        for k, v in other.constant.items():
            constant[k] = constant.get(k, 0) + sign * v
        return SymbolicElement(coords, constant)
    
    def __add__(self, other: 'SymbolicElement') -> 'SymbolicElement':
        return self._combine(other, 1)
    
    def __sub__(self, other: 'SymbolicElement') -> 'SymbolicElement':
        return self._combine(other, -1)
    
    def scale(self, factor) -> 'SymbolicElement':
        factor = Fraction(factor)
        if not factor:
            return SymbolicElement()
        return SymbolicElement(
            {k: {v: factor * c for v, c in form.items()} for k, form in self.coords.items()},
            {k: factor * c for k, c in self.constant.items()}
        )
    
    def _multiply(self, alg: FiniteDimAlgebra, fixed: SparseRow, fixed_on_left: bool) -> 'SymbolicElement':
        coords: Dict[int, LinearForm] = {}
        constant: Dict[int, Fraction] = {}
        for l, form in self.coords.items():
            for j, a in fixed.items():
                product = alg.product(j, l) if fixed_on_left else alg.product(l, j)
                for k, c in product.items():
                    _accumulate(coords, k, form, a * c)
        for l, value in self.constant.items():
            for j, a in fixed.items():
                product = alg.product(j, l) if fixed_on_left else alg.product(l, j)
                for k, c in product.items():
                    constant[k] = constant.get(k, 0) + value * a * c
        return SymbolicElement(coords, constant)
    
    def right_mul(self, alg: FiniteDimAlgebra, y: SparseRow) -> 'SymbolicElement':
        """self · y for a fixed element y."""
        return self._multiply(alg, y, fixed_on_left=False)
    
    def left_mul(self, alg: FiniteDimAlgebra, x: SparseRow) -> 'SymbolicElement':
        """x · self for a fixed element x."""
        return self._multiply(alg, x, fixed_on_left=True)
    
    def bracket_right(self, alg: FiniteDimAlgebra, y: SparseRow) -> 'SymbolicElement':
        """[self, y]."""
        return self.right_mul(alg, y) - self.left_mul(alg, y)
    
    def bracket_left(self, alg: FiniteDimAlgebra, x: SparseRow) -> 'SymbolicElement':
        """[x, self]."""
        return self.left_mul(alg, x) - self.right_mul(alg, x)
    
    def equations(self) -> List[Tuple[LinearForm, Fraction]]:
        """One equation ``form = −constant`` per coordinate of ``self = 0``."""
        keys = sorted(set(self.coords) | set(self.constant))
        result = []
        for k in keys:
            form = self.coords.get(k, {})
            value = -self.constant.get(k, Fraction(0))
            if form or value:
                result.append((dict(form), value))
        return result
    
    def rows(self) -> List[LinearForm]:
        """Homogeneous rows of ``self = 0``; the constant part must vanish."""
        if any(self.constant.values()):
            raise ValueError("Homogeneous rows requested from an affine expression")
        return [dict(self.coords[k]) for k in sorted(self.coords) if self.coords[k]]


class SymbolicMap:
    """An unknown linear map ``x ↦ Σ var · target`` on a set of basis indices.
    
    The map sends basis element ``domain[p]`` to ``Σ_t x[offset + p·T + t] ·
    targets[t]`` with T = len(targets). With ``domain = range(n)`` and unit
    ``targets`` the variable numbering is the column-major flattening used by
    ``LinearMap.to_vector``.
    """
    
    def __init__(self, domain: Sequence[int], targets: Sequence[SparseRow], offset: int = 0):
        self.domain = list(domain)
        self.targets = [dict(t) for t in targets]
        self.offset = offset
        self._position = {index: p for p, index in enumerate(self.domain)}
    
    @classmethod
    def full(cls, dim: int, offset: int = 0) -> 'SymbolicMap':
        """All linear maps K^dim -> K^dim."""
        return cls(range(dim), [{i: Fraction(1)} for i in range(dim)], offset)
    
    @property
    def n_vars(self) -> int:
        return len(self.domain) * len(self.targets)
    
    def var(self, position: int, t: int) -> int:
        return self.offset + position * len(self.targets) + t
    
    def image_basis(self, index: int) -> SymbolicElement:
        p = self._position.get(index)
        if p is None:
            raise ValueError(f"Basis index {index} is outside the map's domain")
        coords: Dict[int, LinearForm] = {}
        for t, target in enumerate(self.targets):
            var = self.var(p, t)
            for k, c in target.items():
                coords.setdefault(k, {})[var] = c
        return SymbolicElement(coords)
    
    def image(self, x: SparseRow) -> SymbolicElement:
        result = SymbolicElement()
        for index, a in x.items():
            result = result + self.image_basis(index).scale(a)
        return result
    
    def realize(self, solution: SparseRow, dim: int) -> LinearMap:
        """The concrete map for a solution vector; zero outside the domain."""
        columns: List[Dict[int, Fraction]] = [{} for _ in range(dim)]
        for p, index in enumerate(self.domain):
            column = columns[index]
            for t, target in enumerate(self.targets):
                value = solution.get(self.var(p, t), 0)
                if not value:
                    continue
                for k, c in target.items():
                    column[k] = column.get(k, 0) + value * c
        return LinearMap(dim, columns)


def collect_rows(expressions: Iterable[SymbolicElement]) -> List[LinearForm]:
    rows: List[LinearForm] = []
    for expression in expressions:
        rows.extend(expression.rows())
    return rows


def collect_equations(expressions: Iterable[SymbolicElement]) -> List[Tuple[LinearForm, Fraction]]:
    equations: List[Tuple[LinearForm, Fraction]] = []
    for expression in expressions:
        equations.extend(expression.equations())
    return equations
