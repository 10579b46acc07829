"""Tests for the block-form checks."""

from src.checks.blocks import DerBlockCheck, FeasibilityCheck, GMapCheck, LieBlockCheck
from src.engine.context import VerificationContext


def test_lie_block_conditions(star_dual):
    """Test that every Lie derivation satisfies the block conditions at both sources."""
    report = LieBlockCheck().run(VerificationContext('star_tree/dual', star_dual))
    
    assert report.passed, report.failures()
    names = [r.name for r in report.results]
    assert 'tau2-module-laws-at-1' in names
    assert 'nu3-module-laws-at-3' in names


def test_der_block_conditions(chain_dual):
    """Test the derivation block conditions."""
    report = DerBlockCheck().run(VerificationContext('chain_relation/dual', chain_dual))
    
    assert report.passed, report.failures()
    assert 'no-delta4-mu1-at-1' in [r.name for r in report.results]


def test_g_map(triangle_dual):
    """Test the G identities for Lie derivations of the triangle."""
    assert GMapCheck().run(VerificationContext('triangle/dual', triangle_dual)).passed


def test_standardizing_maps(star_dual, a2_onepoint):
    """Test feasibility and agreement with the global split."""
    for name, dx in (('star_tree/dual', star_dual), ('a2/onepoint', a2_onepoint)):
        context = VerificationContext(name, dx)
        report = FeasibilityCheck().run(context)
        assert report.passed, report.failures()
        assert report.dimensions['feasible'] == context.lie.dim * len(context.views)
