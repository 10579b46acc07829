"""Checks on the standard decomposition Θ = D + Δ of Lie derivations."""

from src.algebra.spaces import central_image_derivations, is_central_annihilating, is_derivation
from src.core.check import Check
from src.core.errors import DecompositionError
from src.models.report import ConditionReport


class StandardSplitCheck(Check):
    """dim LieDer = dim Der + dim CentralAnn and every Lie derivation splits exactly."""
    
    @property
    def check_id(self) -> str:
        return 'standard-split'
    
    @property
    def anchor(self) -> str:
        return 'lie-derivations-standard-form'
    
    def run(self, context) -> ConditionReport:
        alg = context.algebra
        report = ConditionReport(self.check_id, dimensions=context.dimensions())
        expected = context.der.dim + context.central.dim
        report.add('dimension-identity', context.lie.dim == expected,
                   [] if context.lie.dim == expected
                   else [f"LieDer has dim {context.lie.dim}, Der + CentralAnn gives {expected}"])
        try:
            decompositions = context.decompositions
        except DecompositionError as e:
            report.add('every-basis-element-splits', False, [str(e)])
            return report
        witnesses = []
        for k, (theta, split) in enumerate(zip(context.lie.basis, decompositions)):
            residual = theta - split.derivation_part - split.central_part
            if not residual.is_zero():
                witnesses.append(f"Lie basis element {k}: residual is nonzero")
            elif not is_derivation(alg, split.derivation_part):
                witnesses.append(f"Lie basis element {k}: D is not a derivation")
            elif not is_central_annihilating(alg, split.central_part, context.center):
                witnesses.append(f"Lie basis element {k}: Δ is not central-annihilating")
        report.add('every-basis-element-splits', not witnesses, witnesses[:3])
        return report


class UniquenessCheck(Check):
    """Der ∩ CentralAnn = {0}, so the split is unique."""
    
    @property
    def check_id(self) -> str:
        return 'split-uniqueness'
    
    @property
    def anchor(self) -> str:
        return 'standard-form-unique'
    
    def run(self, context) -> ConditionReport:
        common = context.der.intersection(context.central)
        report = ConditionReport(self.check_id, dimensions={'intersection': common.dim})
        report.add('intersection-zero', common.dim == 0)
        return report


class CentralImageCheck(Check):
    """The only derivation with central image is zero."""
    
    @property
    def check_id(self) -> str:
        return 'central-image-derivations'
    
    @property
    def anchor(self) -> str:
        return 'no-central-valued-derivations'
    
    def run(self, context) -> ConditionReport:
        space = central_image_derivations(context.algebra, context.center)
        report = ConditionReport(self.check_id, dimensions={'central_image_derivations': space.dim})
        report.add('space-zero', space.dim == 0)
        return report


class PathAgreementCheck(Check):
    """Δ vanishes on every nontrivial path, so Θ and D agree there."""
    
    @property
    def check_id(self) -> str:
        return 'path-agreement'
    
    @property
    def anchor(self) -> str:
        return 'lie-derivation-equals-derivation-on-paths'
    
    def run(self, context) -> ConditionReport:
        alg = context.algebra
        report = ConditionReport(self.check_id)
        try:
            decompositions = context.decompositions
        except DecompositionError as e:
            return ConditionReport.skipped(self.check_id, str(e))
        paths = [j for j, path in enumerate(alg.basis) if not path.is_trivial]
        report.dimensions['paths'] = len(paths)
        witnesses = []
        for k, split in enumerate(decompositions):
            for j in paths:
                if split.central_part.column(j):
                    witnesses.append(
                        f"Lie basis element {k}: Δ({alg.label(j)}) = {context.describe(split.central_part.column(j))}"
                    )
                    break
        report.add('central-part-zero-on-paths', not witnesses, witnesses[:3])
        return report
