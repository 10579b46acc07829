"""Tests for the sufficient-criterion checks."""

from src.checks.criteria import FaithfulCriterionCheck, OnePointShapeCheck, ZeroPairingCriterionCheck
from src.engine.context import VerificationContext
from src.models.report import NOT_APPLICABLE, PASS


def test_one_point_checks_decline_dual(star_dual):
    """Test that one-point criteria skip dual extensions."""
    context = VerificationContext('star_tree/dual', star_dual)
    
    assert OnePointShapeCheck().applies_to(context) == 'one-point extensions only'
    assert ZeroPairingCriterionCheck().applies_to(context) == 'one-point extensions only'


def test_one_point_shape(star_onepoint):
    """Test μ4 = δ4 = μ1 = 0 at both sources."""
    report = OnePointShapeCheck().run(VerificationContext('star_tree/onepoint', star_onepoint))
    
    assert report.passed
    assert [r.name for r in report.results] == ['mu4-delta4-mu1-vanish-at-1', 'mu4-delta4-mu1-vanish-at-3']


def test_zero_pairing_criterion(a2_onepoint):
    """Test the zero pairing criterion on E(A2)."""
    report = ZeroPairingCriterionCheck().run(VerificationContext('a2/onepoint', a2_onepoint))
    
    assert report.verdict == PASS
    assert report.result('lie-derivations-standard-at-1').passed


def test_faithful_criterion(star_dual, a2_onepoint):
    """Test the faithful criterion where it applies and where it does not."""
    star = FaithfulCriterionCheck().run(VerificationContext('star_tree/dual', star_dual))
    assert star.verdict == NOT_APPLICABLE
    assert '1: m-faithful-left' in star.reason
    
    a2 = FaithfulCriterionCheck().run(VerificationContext('a2/onepoint', a2_onepoint))
    assert a2.verdict == PASS
