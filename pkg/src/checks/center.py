"""Checks on the center and on subalgebras generated by idempotents."""

from src.algebra.peirce import source_cycle_space_check
from src.algebra.spaces import verify_center_form, vertex_idempotents, w_lower_bound
from src.core.check import Check
from src.models.linear_map import Subspace
from src.models.report import ConditionReport


class CenterFormCheck(Check):
    """Z ⊆ span({1} ∪ {basis cycles p with p² = 0}) for connected quivers with ≥ 2 vertices."""
    
    @property
    def check_id(self) -> str:
        return 'center-form'
    
    @property
    def anchor(self) -> str:
        return 'center-spanned-by-unit-and-square-zero-cycles'
    
    def applies_to(self, context):
        return None if context.is_dual else 'dual extensions only'
    
    def run(self, context) -> ConditionReport:
        return verify_center_form(context.extension, context.center)


class WLowerBoundCheck(Check):
    """Idempotents and commutators generate the whole algebra."""
    
    @property
    def check_id(self) -> str:
        return 'w-lower-bound'
    
    @property
    def anchor(self) -> str:
        return 'generated-by-idempotents-and-commutators'
    
    def run(self, context) -> ConditionReport:
        alg = context.algebra
        generated = w_lower_bound(alg, vertex_idempotents(alg))
        report = ConditionReport(self.check_id, dimensions={'generated': generated.dim, 'algebra': alg.dim})
        outside = generated.witness_outside(Subspace.whole(alg.dim))
        report.add('whole-algebra', generated.is_whole(),
                   [] if outside is None else [f"{context.describe(outside)} is not generated"])
        return report


class SourceCycleCheck(Check):
    """Every Lie derivation sends square-zero cycles at a source into the center."""
    
    @property
    def check_id(self) -> str:
        return 'source-cycle-centrality'
    
    @property
    def anchor(self) -> str:
        return 'source-cycles-map-to-center'
    
    def applies_to(self, context):
        return None if context.is_dual else 'dual extensions only'
    
    def run(self, context) -> ConditionReport:
        report = ConditionReport(self.check_id)
        for vertex in context.views:
            witnesses = []
            for k, theta in enumerate(context.lie.basis):
                cycles = source_cycle_space_check(context.extension, vertex, theta, context.center)
                report.dimensions[f'{vertex}.cycles'] = cycles.dimensions['cycles']
                if not cycles.passed:
                    witnesses.extend(f"Lie basis element {k}: {w}" for w in cycles.failures()[0].witnesses)
            report.add(f'images-central-at-{vertex}', not witnesses, witnesses[:3])
        return report
