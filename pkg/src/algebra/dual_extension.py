"""Dual extensions 𝒟(Λ) and generalized one-point extensions E(Λ).

Both live on the doubled quiver (Γ₀, Γ₁ ∪ Γ₁*). 𝒟(Λ) uses the relations
ρ ∪ ρ* ∪ {αβ*}; E(Λ) adds {α*β}. The relations {αβ*} force every nonzero
path of 𝒟(Λ) into the shape q*·p, so twice the longest Λ-path length
bounds all surviving paths; the builder checks that shape afterwards
instead of trusting it.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.algebra.construction import build_path_algebra
from src.algebra.quivers import double_quiver, longest_path_length, validate_acyclic
from src.core.errors import ConstructionError, QuiverError
from src.core.logging import get_logger
from src.models.algebra import FiniteDimAlgebra
from src.models.quiver import Path, Quiver, Relation, is_starred, star_name


logger = get_logger('algebra.dual_extension')

DUAL = 'dual'
ONEPOINT = 'onepoint'


@dataclass(frozen=True)
class DualExtensionAlgebra:
    """A dual or one-point extension together with its source data.
    
    Attributes:
        algebra: The constructed algebra on the doubled quiver
        source_quiver: The quiver with relations (Γ, ρ) of Λ
        star_map: arrow -> starred arrow
        kind: 'dual' for 𝒟(Λ), 'onepoint' for E(Λ)
    """
    algebra: FiniteDimAlgebra
    source_quiver: Quiver
    star_map: Dict[str, str]
    kind: str = DUAL
    
    def shape(self) -> List[Tuple[Path, Path]]:
        """(q*, p) factorisation of every basis path, in basis order."""
        return [split_shape(self.algebra.quiver, path) for path in self.algebra.basis]


def star_path(path: Path) -> Path:
    """p* for p = αn⋯α1, i.e. α1*⋯αn*; trivial paths are fixed.
    
    Raises:
        QuiverError: If the path already contains a starred arrow
    """
    if path.is_trivial:
        return path
    for name in path.arrows:
        if is_starred(name):
            raise QuiverError(f"Arrow '{name}' has no star partner")
    return Path(tuple(star_name(name) for name in reversed(path.arrows)))


def split_shape(doubled: Quiver, path: Path) -> Tuple[Path, Path]:
    """Factor a path of the doubled quiver as q*·p.
    
    Returns:
        (q*, p) with p unstarred and q* starred (either may be trivial)
        
    Raises:
        ConstructionError: If an unstarred arrow is followed by a starred one
    """
    arrows = path.arrows
    cut = 0
    while cut < len(arrows) and is_starred(arrows[cut]):
        cut += 1
    starred, plain = arrows[:cut], arrows[cut:]
    if any(is_starred(name) for name in plain):
        raise ConstructionError(f"Path {path.label} is not of the form q*·p")
    if path.is_trivial:
        return path, path
    p = Path(plain) if plain else Path.trivial(doubled.source_of(path))
    q_star = Path(starred) if starred else Path.trivial(doubled.target_of(path))
    return q_star, p


def _starred_relations(quiver: Quiver) -> List[Relation]:
    return [Relation(tuple((c, star_path(p)) for c, p in r.terms)) for r in quiver.relations]


def _mixed_relations(quiver: Quiver, starred_first: bool) -> List[Relation]:
    """{α·β*} (starred_first=True) or {α*·β} for composable arrow pairs."""
    relations = []
    for alpha in quiver.arrows:
        for beta in quiver.arrows:
            if starred_first:
                # α·β* means β* then α: needs s(β) = s(α)
                if beta.source == alpha.source:
                    relations.append(Relation.monomial(Path.of(alpha.name, star_name(beta.name))))
            else:
                # α*·β means β then α*: needs e(β) = e(α)
                if beta.target == alpha.target:
                    relations.append(Relation.monomial(Path.of(star_name(alpha.name), beta.name)))
    return relations


def _check_source(quiver: Quiver) -> None:
    if quiver.doubled:
        raise QuiverError("Expected a quiver without starred arrows")
    if not validate_acyclic(quiver):
        raise QuiverError("Dual extensions need a quiver without oriented cycles")


def build_base_algebra(quiver: Quiver) -> FiniteDimAlgebra:
    """Λ = K(Γ, ρ) for an acyclic quiver."""
    _check_source(quiver)
    bound = max(1, longest_path_length(quiver))
    return build_path_algebra(quiver, quiver.relations, bound, name='Λ')


def _build(quiver: Quiver, kind: str) -> DualExtensionAlgebra:
    base = build_base_algebra(quiver)
    longest = max(p.length for p in base.basis)
    doubled = double_quiver(quiver)
    relations = list(quiver.relations) + _starred_relations(quiver) + _mixed_relations(quiver, True)
    if kind == ONEPOINT:
        relations += _mixed_relations(quiver, False)
    bound = max(1, 2 * longest)
    label = '𝒟(Λ)' if kind == DUAL else 'E(Λ)'
    algebra = build_path_algebra(doubled, relations, bound, name=label)
    result = DualExtensionAlgebra(
        algebra=algebra,
        source_quiver=quiver,
        star_map={a.name: star_name(a.name) for a in quiver.arrows},
        kind=kind
    )
    shape = result.shape()
    if kind == DUAL:
        ends = Counter(quiver.target_of(p) for p in base.basis)
        expected = sum(n * n for n in ends.values())
        if algebra.dim != expected:
            raise ConstructionError(
                f"Dual extension has dim {algebra.dim}, expected {expected} from the q*·p shape"
            )
    else:
        for (q_star, p), path in zip(shape, algebra.basis):
            if not q_star.is_trivial and not p.is_trivial:
                raise ConstructionError(f"Path {path.label} mixes starred and unstarred arrows")
    logger.debug(f"{label}: dim {algebra.dim} (Λ has dim {base.dim}, bound {bound})")
    return result


def build_dual_extension(quiver: Quiver) -> DualExtensionAlgebra:
    """𝒟(Λ) for Λ = K(Γ, ρ) with Γ acyclic."""
    return _build(quiver, DUAL)


def build_one_point_extension(quiver: Quiver) -> DualExtensionAlgebra:
    """E(Λ) for Λ = K(Γ, ρ) with Γ acyclic and at least two vertices."""
    if len(quiver.vertices) < 2:
        raise QuiverError("One-point extensions need at least 2 vertices")
    return _build(quiver, ONEPOINT)


def build_extension(quiver: Quiver, kind: str) -> DualExtensionAlgebra:
    """Dispatch on ``kind`` ('dual' or 'onepoint')."""
    if kind == DUAL:
        return build_dual_extension(quiver)
    if kind == ONEPOINT:
        return build_one_point_extension(quiver)
    raise ValueError(f"Unknown extension kind '{kind}'")
