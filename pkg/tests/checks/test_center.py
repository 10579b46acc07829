"""Tests for the center checks."""

from src.checks.center import CenterFormCheck, SourceCycleCheck, WLowerBoundCheck
from src.engine.context import VerificationContext
from src.models.report import SKIPPED


def test_center_form_dual_only(star_dual, star_onepoint):
    """Test that the center form applies to dual extensions only."""
    check = CenterFormCheck()
    
    assert check.run(VerificationContext('star_tree/dual', star_dual)).passed
    assert check.applies_to(VerificationContext('star_tree/onepoint', star_onepoint)) == 'dual extensions only'


def test_center_form_skips_single_vertex(single_dual):
    """Test the skip for a single vertex."""
    report = CenterFormCheck().run(VerificationContext('single_vertex/dual', single_dual))
    
    assert report.verdict == SKIPPED


def test_w_lower_bound(triangle_dual, a2_onepoint):
    """Test that idempotents and commutators generate the algebra."""
    for name, dx in (('triangle/dual', triangle_dual), ('a2/onepoint', a2_onepoint)):
        report = WLowerBoundCheck().run(VerificationContext(name, dx))
        assert report.passed
        assert report.dimensions['generated'] == dx.algebra.dim


def test_source_cycles(star_dual):
    """Test source cycles at both sources of the star tree."""
    report = SourceCycleCheck().run(VerificationContext('star_tree/dual', star_dual))
    
    assert report.passed
    assert [r.name for r in report.results] == ['images-central-at-1', 'images-central-at-3']
    assert report.dimensions['1.cycles'] == 1
