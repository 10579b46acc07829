"""Sufficient criteria for standard Lie derivations, checked where they apply."""

from src.algebra.peirce import faithful_criterion, one_point_derivation_shape, zero_pairing_criterion
from src.core.check import Check
from src.models.report import NOT_APPLICABLE, ConditionReport


def _over_views(context, title: str, criterion) -> ConditionReport:
    """Run a per-view criterion; not-applicable only when no view satisfies the hypotheses."""
    report = ConditionReport(title)
    reasons = []
    for vertex, view in context.views.items():
        sub = criterion(view)
        if sub.verdict == NOT_APPLICABLE:
            reasons.append(f"{vertex}: {sub.reason}")
            continue
        for result in sub.results:
            report.add(f'{result.name}-at-{vertex}', result.passed, result.witnesses)
        for key, value in sub.dimensions.items():
            report.dimensions[f'{vertex}.{key}'] = value
    report.reason = '; '.join(reasons)
    if not report.results:
        report.status = NOT_APPLICABLE
    return report


class OnePointShapeCheck(Check):
    """Derivations of a one-point extension have μ4 = δ4 = μ1 = 0 at a source complement."""
    
    @property
    def check_id(self) -> str:
        return 'one-point-derivation-shape'
    
    @property
    def anchor(self) -> str:
        return 'derivations-of-one-point-extensions'
    
    def applies_to(self, context):
        return None if context.is_one_point else 'one-point extensions only'
    
    def run(self, context) -> ConditionReport:
        return _over_views(context, self.check_id, lambda view: one_point_derivation_shape(view, context.der))


class ZeroPairingCriterionCheck(Check):
    """Zero pairings with standard, generated corners force every Lie derivation to be standard."""
    
    @property
    def check_id(self) -> str:
        return 'zero-pairing-criterion'
    
    @property
    def anchor(self) -> str:
        return 'one-point-extensions-have-standard-lie-derivations'
    
    def applies_to(self, context):
        return None if context.is_one_point else 'one-point extensions only'
    
    def run(self, context) -> ConditionReport:
        return _over_views(
            context, self.check_id,
            lambda view: zero_pairing_criterion(view, context.lie, context.der, context.central)
        )


class FaithfulCriterionCheck(Check):
    """A faithful M and surjective center projections force every Lie derivation to be standard."""
    
    @property
    def check_id(self) -> str:
        return 'faithful-criterion'
    
    @property
    def anchor(self) -> str:
        return 'faithful-bimodule-criterion'
    
    def run(self, context) -> ConditionReport:
        return _over_views(
            context, self.check_id,
            lambda view: faithful_criterion(view, context.lie, context.der, context.central, context.center)
        )
