"""Checks on bundled map fixtures."""

from src.algebra.spaces import decompose_standard, is_derivation, is_lie_derivation
from src.core.check import Check
from src.core.errors import DecompositionError
from src.models.report import ConditionReport


class FixtureMapCheck(Check):
    """Fixture maps: which variant is a Lie derivation, and its central part per sample."""
    
    @property
    def check_id(self) -> str:
        return 'fixture-maps'
    
    @property
    def anchor(self) -> str:
        return 'lie-derivation-that-is-not-a-derivation'
    
    def applies_to(self, context):
        return None if context.fixtures else 'no map fixtures'
    
    def run(self, context) -> ConditionReport:
        alg = context.algebra
        report = ConditionReport(self.check_id)
        for fixture in context.fixtures:
            samples = context.sample_list(fixture)
            variants = fixture.variant_names or [None]
            lie_variants = [
                v for v in variants
                if all(is_lie_derivation(alg, fixture.instantiate(alg, v, s)) for s in samples)
            ]
            names = ', '.join(str(v) for v in lie_variants) or 'none'
            report.add(f'{fixture.name}:one-lie-variant', len(lie_variants) == 1, [f"Lie variants: {names}"])
            if len(lie_variants) != 1:
                continue
            variant = lie_variants[0]
            if fixture.derivation is not None:
                actual = all(is_derivation(alg, fixture.instantiate(alg, variant, s)) for s in samples)
                report.add(f'{fixture.name}:derivation-status', actual == fixture.derivation,
                           [f"is a derivation: {actual}"])
            witnesses = []
            unique = True
            for sample in samples:
                theta = fixture.instantiate(alg, variant, sample)
                try:
                    split = decompose_standard(alg, theta, context.der, context.central)
                except DecompositionError as e:
                    witnesses.append(f"{sample}: {e}")
                    continue
                unique = unique and split.unique
                for label in fixture.expected_central:
                    actual = split.central_part.column(alg.index_of(label))
                    expected = fixture.expected_image(alg, label, sample).support()
                    if actual != expected:
                        witnesses.append(
                            f"{sample}: Δ({label}) = {context.describe(actual)}, expected {context.describe(expected)}"
                        )
            report.add(f'{fixture.name}:central-part-matches', not witnesses, witnesses[:3])
            report.add(f'{fixture.name}:unique', unique)
        report.dimensions['fixtures'] = len(context.fixtures)
        return report
