"""Quiver operations: acyclicity, doubling, path enumeration."""

from typing import List

import networkx as nx

from src.core.errors import QuiverError
from src.core.logging import get_logger
from src.models.quiver import Arrow, Path, Quiver, is_starred, star_name


logger = get_logger('algebra.quivers')


def validate_acyclic(quiver: Quiver) -> bool:
    """True iff the quiver has no oriented cycle (loops included)."""
    return nx.is_directed_acyclic_graph(quiver.graph())


def double_quiver(quiver: Quiver) -> Quiver:
    """The quiver (Γ₀, Γ₁ ∪ Γ₁*).
    
    Each arrow ``α: j -> i`` contributes ``α*: i -> j``. Relations are not
    copied; builders attach their own relation sets.
    
    Raises:
        QuiverError: If the input has an oriented cycle or is already doubled
    """
    if quiver.doubled or any(is_starred(a.name) for a in quiver.arrows):
        raise QuiverError("Quiver already carries starred arrows")
    if not validate_acyclic(quiver):
        raise QuiverError("Cannot double a quiver with oriented cycles")
    starred = tuple(Arrow(star_name(a.name), a.target, a.source) for a in quiver.arrows)
    return Quiver(quiver.vertices, quiver.arrows + starred, (), doubled=True)


def enumerate_paths(quiver: Quiver, max_len: int) -> List[Path]:
    """All paths with at most ``max_len`` arrows, in canonical order.
    
    Cyclic quivers are fine; the bound truncates.
    """
    if max_len < 0:
        raise QuiverError(f"max_len must be non-negative, got {max_len}")
    layer = [Path.trivial(v) for v in quiver.vertices]
    paths = list(layer)
    for _ in range(max_len):
        extended = []
        for path in layer:
            end = quiver.target_of(path)
            for arrow in quiver.arrows_from(end):
                extended.append(Path((arrow.name,) + path.arrows))
        if not extended:
            break
        paths.extend(extended)
        layer = extended
    return sorted(paths, key=quiver.path_key)


def longest_path_length(quiver: Quiver) -> int:
    """Number of arrows in a longest path of an acyclic quiver (no relations)."""
    if not validate_acyclic(quiver):
        raise QuiverError("Longest path is unbounded for a quiver with oriented cycles")
    return nx.dag_longest_path_length(nx.DiGraph(quiver.graph())) if quiver.arrows else 0
