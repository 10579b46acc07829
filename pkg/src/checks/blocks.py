"""Checks on the block form of (Lie) derivations at source complements."""

from typing import Callable, Dict, List

from src.algebra.peirce import (
    find_standardizing_maps, g_defect, standard_parts_from_block_maps,
    verify_der_block_conditions, verify_lie_block_conditions
)
from src.algebra.spaces import is_central_annihilating, is_derivation
from src.core.check import Check
from src.core.errors import DecompositionError, PeirceError
from src.models.peirce import BlockMapData, PeirceView
from src.models.report import ConditionReport


class _Merged:
    """Folds many per-map condition reports into one result per condition."""
    
    def __init__(self):
        self.order: List[str] = []
        self.failed: Dict[str, List[str]] = {}
    
    def fold(self, prefix: str, label: str, sub: ConditionReport) -> None:
        for result in sub.results:
            name = f'{result.name}-at-{prefix}'
            if name not in self.order:
                self.order.append(name)
            if not result.passed:
                witnesses = self.failed.setdefault(name, [])
                witnesses.extend(f"{label}: {w}" for w in result.witnesses)
                if not result.witnesses:
                    witnesses.append(label)
    
    def fail(self, name: str, witness: str) -> None:
        if name not in self.order:
            self.order.append(name)
        self.failed.setdefault(name, []).append(witness)
    
    def into(self, report: ConditionReport) -> ConditionReport:
        for name in self.order:
            witnesses = self.failed.get(name, [])
            report.add(name, not witnesses, witnesses[:3])
        return report


def _per_block_map(
    context,
    space: str,
    title: str,
    verify: Callable[[PeirceView, BlockMapData], ConditionReport]
) -> ConditionReport:
    merged = _Merged()
    for vertex, view in context.views.items():
        for k in range(len(context.maps(space))):
            label = f"{space} basis element {k}"
            try:
                data = context.block_data(vertex, space, k)
            except PeirceError as e:
                merged.fail(f'block-form-at-{vertex}', f"{label}: {e}")
                continue
            merged.fold(vertex, label, verify(view, data))
    return merged.into(ConditionReport(title, dimensions={'maps': len(context.maps(space))}))


class LieBlockCheck(Check):
    """Every Lie derivation has the block form and satisfies its five block conditions."""
    
    @property
    def check_id(self) -> str:
        return 'lie-block-conditions'
    
    @property
    def anchor(self) -> str:
        return 'lie-derivations-of-generalized-matrix-algebras'
    
    def run(self, context) -> ConditionReport:
        return _per_block_map(context, 'lie', self.check_id, verify_lie_block_conditions)


class DerBlockCheck(Check):
    """Every derivation has the derivation block form (no δ4, no μ1)."""
    
    @property
    def check_id(self) -> str:
        return 'der-block-conditions'
    
    @property
    def anchor(self) -> str:
        return 'derivations-of-generalized-matrix-algebras'
    
    def run(self, context) -> ConditionReport:
        return _per_block_map(context, 'der', self.check_id, verify_der_block_conditions)


class GMapCheck(Check):
    """G(x, y) = δ1(xy) − xδ1(y) − δ1(x)y is symmetric and satisfies the module identities."""
    
    @property
    def check_id(self) -> str:
        return 'g-map'
    
    @property
    def anchor(self) -> str:
        return 'derivation-defect-of-lie-block'
    
    def run(self, context) -> ConditionReport:
        return _per_block_map(context, 'lie', self.check_id, g_defect)


class FeasibilityCheck(Check):
    """Standardizing maps exist exactly when the global standard split exists, and give the same split."""
    
    @property
    def check_id(self) -> str:
        return 'standardizing-maps'
    
    @property
    def anchor(self) -> str:
        return 'standard-form-criterion-for-generalized-matrix-algebras'
    
    def run(self, context) -> ConditionReport:
        alg = context.algebra
        try:
            decompositions = context.decompositions
        except DecompositionError:
            decompositions = None
        merged = _Merged()
        feasible_count = 0
        for vertex, view in context.views.items():
            agree, valid = f'feasible-iff-split-at-{vertex}', f'split-agrees-at-{vertex}'
            merged.order.extend([agree, valid])
            for k in range(context.lie.dim):
                label = f"lie basis element {k}"
                try:
                    data = context.block_data(vertex, 'lie', k)
                except PeirceError as e:
                    merged.fail(agree, f"{label}: {e}")
                    continue
                maps = find_standardizing_maps(view, data)
                feasible_count += maps is not None
                if (maps is not None) != (decompositions is not None):
                    merged.fail(agree, f"{label}: feasible={maps is not None}")
                    continue
                if maps is None:
                    continue
                d_part, h = standard_parts_from_block_maps(view, data, maps)
                if not is_derivation(alg, d_part):
                    merged.fail(valid, f"{label}: Θ − h is not a derivation")
                elif not is_central_annihilating(alg, h, context.center):
                    merged.fail(valid, f"{label}: h is not central-annihilating")
                elif decompositions[k].unique and h != decompositions[k].central_part:
                    merged.fail(valid, f"{label}: h differs from the unique central part")
        report = ConditionReport(self.check_id, dimensions={'feasible': feasible_count})
        return merged.into(report)
