"""Seeded random acyclic quivers with monomial relations."""

import random
from collections import Counter
from typing import List, Optional, Tuple

from src.algebra.dual_extension import build_base_algebra
from src.config.loader import RandomSettings
from src.core.logging import get_logger
from src.models.quiver import Arrow, Path, Quiver, Relation


logger = get_logger('corpus.random')


def random_quiver(rng: random.Random, settings: RandomSettings) -> Quiver:
    """Draw one quiver.
    
    Arrows always run from a lower to a higher vertex number, so the quiver
    is acyclic. Each composable arrow pair becomes a length-two zero
    relation with probability ``settings.relation_probability``.
    """
    n = rng.randint(1, settings.max_vertices)
    vertices = tuple(str(v) for v in range(1, n + 1))
    arrows: List[Arrow] = []
    if n > 1:
        for k in range(rng.randint(0, settings.max_arrows)):
            source = rng.randint(1, n - 1)
            target = rng.randint(source + 1, n)
            arrows.append(Arrow(f"a{k + 1}", str(source), str(target)))
    relations = []
    for first in arrows:
        for second in arrows:
            if first.target == second.source and rng.random() < settings.relation_probability:
                relations.append(Relation.monomial(Path((second.name, first.name))))
    return Quiver(vertices, tuple(arrows), tuple(relations))


def dual_dimension(quiver: Quiver) -> int:
    """dim of the dual extension: Σ over vertices of (#basis paths ending there)²."""
    base = build_base_algebra(quiver)
    ending = Counter(base.target_of(i) for i in range(base.dim))
    return sum(count * count for count in ending.values())


def generate_quivers(
    settings: RandomSettings,
    count: Optional[int] = None,
    seed: Optional[int] = None
) -> List[Tuple[str, Quiver]]:
    """Named random quivers whose dual extensions fit ``settings.max_dual_dim``.
    
    Quiver k is drawn from a generator seeded with (seed, k), re-drawing from
    the same generator until it fits.
    
    Raises:
        ValueError: If a quiver still does not fit after ``max_attempts`` draws
    """
    count = settings.count if count is None else count
    seed = settings.seed if seed is None else seed
    result = []
    for k in range(count):
        rng = random.Random(f"{seed}/{k}")
        for attempt in range(settings.max_attempts):
            quiver = random_quiver(rng, settings)
            dim = dual_dimension(quiver)
            if dim <= settings.max_dual_dim:
                logger.debug(f"random-{seed}-{k}: {len(quiver.arrows)} arrows, dual dim {dim}, attempt {attempt + 1}")
                result.append((f"random-{seed}-{k}", quiver))
                break
        else:
            raise ValueError(
                f"No random quiver with dual dimension <= {settings.max_dual_dim} "
                f"after {settings.max_attempts} attempts (seed {seed}, index {k})"
            )
    return result
