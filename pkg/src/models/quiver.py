"""Quivers, paths and relations.

Paths are written the way products are: ``αn.….α1`` with the rightmost
arrow applied first. A ``Path`` stores only its arrow sequence (and a base
vertex when trivial); endpoints are always derived through the owning
``Quiver``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.core.errors import QuiverError

STAR = '*'


def star_name(name: str) -> str:
    """Name of the reversed arrow paired with ``name``."""
    return f"{name}{STAR}"


def is_starred(name: str) -> bool:
    """Whether an arrow name carries the reserved star suffix."""
    return name.endswith(STAR)


@dataclass(frozen=True)
class Arrow:
    """A named arrow ``name: source -> target``."""
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path of a quiver.
    
    Attributes:
        arrows: Arrow names in product order (index 0 is applied last)
        base_vertex: The vertex of a trivial path; None for nontrivial paths
    """
    arrows: Tuple[str, ...] = ()
    base_vertex: Optional[str] = None
    
    def __post_init__(self):
        if not isinstance(self.arrows, tuple):
            object.__setattr__(self, 'arrows', tuple(self.arrows))
        if self.arrows and self.base_vertex is not None:
            raise QuiverError("A nontrivial path has no base vertex")
        if not self.arrows and self.base_vertex is None:
            raise QuiverError("A trivial path needs a base vertex")
    
    @classmethod
    def trivial(cls, vertex: str) -> 'Path':
        """The trivial path e_vertex."""
        return cls((), vertex)
    
    @classmethod
    def of(cls, *names: str) -> 'Path':
        """Nontrivial path from arrow names in product order."""
        return cls(tuple(names))
    
    @property
    def length(self) -> int:
        return len(self.arrows)
    
    @property
    def is_trivial(self) -> bool:
        return not self.arrows
    
    @property
    def label(self) -> str:
        """Display label: ``e<vertex>`` or the dotted arrow sequence."""
        if self.is_trivial:
            return f"e{self.base_vertex}"
        return '.'.join(self.arrows)
    
    def then(self, other: 'Path') -> 'Path':
        """Concatenation ``self · other`` (``other`` applied first).
        
        Endpoint compatibility is the caller's responsibility; trivial paths
        act as identities.
        """
        if other.is_trivial:
            return self
        if self.is_trivial:
            return other
        return Path(self.arrows + other.arrows)
    
    def subpaths(self, length: int) -> Iterable['Path']:
        """All contiguous subpaths with ``length`` arrows."""
        for start in range(len(self.arrows) - length + 1):
            yield Path(self.arrows[start:start + length])
    
    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of one common length ≥ 2."""
    terms: Tuple[Tuple[Fraction, Path], ...]
    
    def __post_init__(self):
        merged: Dict[Path, Fraction] = {}
        for coefficient, path in self.terms:
            merged[path] = merged.get(path, Fraction(0)) + Fraction(coefficient)
        terms = tuple((c, p) for p, c in merged.items() if c)
        if not terms:
            raise QuiverError("Relation has no nonzero terms")
        lengths = {p.length for _, p in terms}
        if min(lengths) < 2:
            raise QuiverError(
                f"Relation {self._describe(terms)}: every path needs at least 2 arrows"
            )
        if len(lengths) > 1:
            raise QuiverError(
                f"Relation {self._describe(terms)}: paths of different lengths "
                f"{sorted(lengths)} (relations must be homogeneous)"
            )
        object.__setattr__(self, 'terms', terms)
    
    @classmethod
    def monomial(cls, path: Path) -> 'Relation':
        return cls(((Fraction(1), path),))
    
    @property
    def length(self) -> int:
        return self.terms[0][1].length
    
    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1
    
    @property
    def paths(self) -> List[Path]:
        return [p for _, p in self.terms]
    
    @staticmethod
    def _describe(terms) -> str:
        return ' + '.join(f"{c}*{p.label}" for c, p in terms)
    
    def __str__(self) -> str:
        return self._describe(self.terms)


@dataclass(frozen=True)
class Quiver:
    """A finite quiver with relations.
    
    Attributes:
        vertices: Vertex identifiers in declaration order
        arrows: Arrows in declaration order
        relations: Relations over the arrows
        doubled: True for quivers carrying starred arrows (Γ₁ ∪ Γ₁*); in a
            plain quiver the star suffix is reserved
    """
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()
    relations: Tuple[Relation, ...] = ()
    doubled: bool = False
    _arrow_index: Dict[str, Arrow] = field(default=None, init=False, repr=False, compare=False)
    _vertex_order: Dict[str, int] = field(default=None, init=False, repr=False, compare=False)
    
    def __post_init__(self):
        for name in ('vertices', 'arrows', 'relations'):
            value = getattr(self, name)
            if not isinstance(value, tuple):
                object.__setattr__(self, name, tuple(value))
        if not self.vertices:
            raise QuiverError("A quiver needs at least one vertex")
        vertex_order: Dict[str, int] = {}
        for vertex in self.vertices:
            if vertex in vertex_order:
                raise QuiverError(f"Duplicate vertex '{vertex}'")
            vertex_order[vertex] = len(vertex_order)
        trivial_labels = {f"e{v}" for v in self.vertices}
        index: Dict[str, Arrow] = {}
        for arrow in self.arrows:
            if not arrow.name:
                raise QuiverError("Arrow names must be non-empty")
            if arrow.name in index:
                raise QuiverError(f"Duplicate arrow '{arrow.name}'")
            if arrow.name in trivial_labels:
                raise QuiverError(f"Arrow '{arrow.name}' collides with a trivial path label")
            for end in (arrow.source, arrow.target):
                if end not in vertex_order:
                    raise QuiverError(f"Arrow '{arrow.name}': unknown vertex '{end}'")
            index[arrow.name] = arrow
        for arrow in self.arrows:
            if is_starred(arrow.name):
                if not self.doubled:
                    raise QuiverError(
                        f"Arrow '{arrow.name}': names ending in '{STAR}' are reserved"
                    )
                partner = index.get(arrow.name[:-1])
                if partner is None or (partner.source, partner.target) != (arrow.target, arrow.source):
                    raise QuiverError(f"Arrow '{arrow.name}' has no reversed partner")
        object.__setattr__(self, '_arrow_index', index)
        object.__setattr__(self, '_vertex_order', vertex_order)
        for relation in self.relations:
            self._check_relation(relation)
    
    def _check_relation(self, relation: Relation) -> None:
        ends = set()
        for path in relation.paths:
            self.check_path(path)
            ends.add((self.source_of(path), self.target_of(path)))
        if len(ends) > 1:
            raise QuiverError(f"Relation {relation}: paths are not parallel")
    
    def arrow(self, name: str) -> Arrow:
        """Look up an arrow by name."""
        try:
            return self._arrow_index[name]
        except KeyError:
            raise QuiverError(f"Unknown arrow '{name}'")
    
    def has_arrow(self, name: str) -> bool:
        return name in self._arrow_index
    
    def check_path(self, path: Path) -> None:
        """Raise QuiverError unless ``path`` is a path of this quiver."""
        if path.is_trivial:
            if path.base_vertex not in self._vertex_order:
                raise QuiverError(f"Unknown vertex '{path.base_vertex}'")
            return
        arrows = [self.arrow(name) for name in path.arrows]
        # arrows[k] is applied after arrows[k + 1]
        for later, earlier in zip(arrows, arrows[1:]):
            if earlier.target != later.source:
                raise QuiverError(
                    f"Path {path.label}: '{earlier.name}' ends at {earlier.target} "
                    f"but '{later.name}' starts at {later.source}"
                )
    
    def source_of(self, path: Path) -> str:
        """s(p)."""
        if path.is_trivial:
            return path.base_vertex
        return self.arrow(path.arrows[-1]).source
    
    def target_of(self, path: Path) -> str:
        """e(p)."""
        if path.is_trivial:
            return path.base_vertex
        return self.arrow(path.arrows[0]).target
    
    def vertex_index(self, vertex: str) -> int:
        return self._vertex_order[vertex]
    
    def path_key(self, path: Path) -> Tuple:
        """Canonical order: length, then arrow names, then base vertex order."""
        if path.is_trivial:
            return (0, (), self._vertex_order[path.base_vertex])
        return (path.length, path.arrows, -1)
    
    def arrows_from(self, vertex: str) -> List[Arrow]:
        return [a for a in self.arrows if a.source == vertex]
    
    def arrows_into(self, vertex: str) -> List[Arrow]:
        return [a for a in self.arrows if a.target == vertex]
    
    def graph(self) -> nx.MultiDiGraph:
        """The arrow digraph."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((a.source, a.target, a.name) for a in self.arrows)
        return graph
    
    def sources(self) -> List[str]:
        """Vertices without incoming arrows, in declaration order."""
        targets = {a.target for a in self.arrows}
        return [v for v in self.vertices if v not in targets]
    
    def sinks(self) -> List[str]:
        """Vertices without outgoing arrows, in declaration order."""
        origins = {a.source for a in self.arrows}
        return [v for v in self.vertices if v not in origins]
    
    def is_connected(self) -> bool:
        """Weak connectivity of the underlying graph."""
        return nx.is_weakly_connected(self.graph())
    
    def with_relations(self, relations: Sequence[Relation]) -> 'Quiver':
        """Same vertices and arrows, different relation set."""
        return Quiver(self.vertices, self.arrows, tuple(relations), self.doubled)
    
    def remove_vertex(self, vertex: str) -> 'Quiver':
        """Drop a vertex, its arrows and every relation touching it."""
        if vertex not in self._vertex_order:
            raise QuiverError(f"Unknown vertex '{vertex}'")
        if len(self.vertices) == 1:
            raise QuiverError("Cannot remove the only vertex")
        arrows = tuple(a for a in self.arrows if vertex not in (a.source, a.target))
        kept = {a.name for a in arrows}
        relations = tuple(
            r for r in self.relations
            if all(name in kept for p in r.paths for name in p.arrows)
        )
        return Quiver(
            tuple(v for v in self.vertices if v != vertex), arrows, relations, self.doubled
        )
