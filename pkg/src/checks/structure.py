"""Checks on the algebra itself: multiplication, blocks, pairings, solvers."""

from src.algebra.peirce import block_closure_witness, pairing_image
from src.algebra.spaces import derivation_rows, derivation_space_from_generators
from src.core.check import Check
from src.core.linalg import dense_nullspace, to_dense
from src.models.report import ConditionReport

# Dense elimination is quadratic in dim² unknowns.
DENSE_ORACLE_LIMIT = 12


class AssociativityCheck(Check):
    """(b_i b_j) b_k = b_i (b_j b_k) on all basis triples."""
    
    @property
    def check_id(self) -> str:
        return 'associativity'
    
    @property
    def anchor(self) -> str:
        return 'associative-structure-constants'
    
    def run(self, context) -> ConditionReport:
        report = ConditionReport(self.check_id, dimensions={'algebra': context.algebra.dim})
        report.add('basis-triples', context.algebra.check_associativity())
        return report


class BlockClosureCheck(Check):
    """Block products land in the predicted Peirce block at every source complement."""
    
    @property
    def check_id(self) -> str:
        return 'block-closure'
    
    @property
    def anchor(self) -> str:
        return 'generalized-matrix-algebra-blocks'
    
    def run(self, context) -> ConditionReport:
        report = ConditionReport(self.check_id)
        for vertex, view in context.views.items():
            witness = block_closure_witness(view)
            report.add(f'closed-at-{vertex}', witness is None, [] if witness is None else [witness])
            for block, dim in view.dims.items():
                report.dimensions[f'{vertex}.{block}'] = dim
        return report


class PairingLawCheck(Check):
    """M·N = 0 always; N·M ≠ 0 in a dual extension when M ≠ 0, N·M = 0 in a one-point extension."""
    
    @property
    def check_id(self) -> str:
        return 'pairing-law'
    
    @property
    def anchor(self) -> str:
        return 'bilinear-pairings-at-source'
    
    def run(self, context) -> ConditionReport:
        report = ConditionReport(self.check_id)
        for vertex, view in context.views.items():
            mn = pairing_image(view, 'MN')
            nm = pairing_image(view, 'NM')
            report.dimensions[f'{vertex}.MN'] = mn.dim
            report.dimensions[f'{vertex}.NM'] = nm.dim
            report.add(f'mn-zero-at-{vertex}', mn.is_zero(),
                       [context.describe(v) for v in mn.basis[:3]])
            if context.is_dual:
                expected_zero = view.dim('M') == 0
                report.add(f'nm-nonzero-at-{vertex}', nm.is_zero() == expected_zero)
            else:
                report.add(f'nm-zero-at-{vertex}', nm.is_zero(),
                           [context.describe(v) for v in nm.basis[:3]])
        return report


class DerivationOracleCheck(Check):
    """All-pairs, generator-pair and dense solvers agree on the derivation space."""
    
    @property
    def check_id(self) -> str:
        return 'derivation-oracle'
    
    @property
    def anchor(self) -> str:
        return 'derivations-determined-by-generators'
    
    def run(self, context) -> ConditionReport:
        alg = context.algebra
        generated = derivation_space_from_generators(alg)
        report = ConditionReport(
            self.check_id, dimensions={'all_pairs': context.der.dim, 'generators': generated.dim}
        )
        report.add('generator-system-agrees',
                   context.der.contains_space(generated) and generated.contains_space(context.der))
        if alg.dim <= DENSE_ORACLE_LIMIT:
            n_vars = alg.dim * alg.dim
            rows = derivation_rows(alg)
            nullity = len(dense_nullspace([to_dense(r, n_vars) for r in rows])) if rows else n_vars
            report.dimensions['dense'] = nullity
            report.add('dense-solver-agrees', nullity == context.der.dim)
        return report


class InclusionCheck(Check):
    """Every derivation is a Lie derivation."""
    
    @property
    def check_id(self) -> str:
        return 'derivation-inclusion'
    
    @property
    def anchor(self) -> str:
        return 'derivations-are-lie-derivations'
    
    def run(self, context) -> ConditionReport:
        report = ConditionReport(self.check_id, dimensions={
            'derivations': context.der.dim, 'lie_derivations': context.lie.dim
        })
        report.add('der-inside-lieder', context.lie.contains_space(context.der))
        return report
