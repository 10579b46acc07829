"""Tests for condition reports and check records."""

import pytest

from src.models.report import (
    FAIL, NOT_APPLICABLE, PASS, SKIPPED, CheckRecord, ConditionReport, ReportBundle
)


def test_condition_report_verdict():
    """Test that the verdict follows the results unless set explicitly."""
    report = ConditionReport('laws')
    report.add('first', True)
    assert report.verdict == PASS
    
    report.add('second', False, ['x·y ≠ y·x'])
    assert report.verdict == FAIL
    assert [r.name for r in report.failures()] == ['second']
    assert report.result('second').witnesses == ['x·y ≠ y·x']
    with pytest.raises(KeyError):
        report.result('third')
    
    skipped = ConditionReport.skipped('laws', 'no sources')
    assert skipped.verdict == SKIPPED
    assert not skipped.passed


def test_condition_report_to_dict_sorts_dimensions():
    """Test the serialised form."""
    report = ConditionReport('laws', dimensions={'b': 2, 'a': 1})
    report.add('first', True)
    
    data = report.to_dict()
    assert list(data['dimensions']) == ['a', 'b']
    assert data['conditions'] == [{'name': 'first', 'passed': True, 'witnesses': []}]


def test_check_record_rejects_unknown_verdict():
    """Test verdict validation."""
    with pytest.raises(ValueError, match="verdict must be one of"):
        CheckRecord('associativity', 'associative', 'a2/dual', 'maybe')


def test_check_record_leaves_out_elapsed():
    """Test that timing is not serialised."""
    record = CheckRecord('associativity', 'associative', 'a2/dual', PASS, elapsed=1.5)
    
    data = record.to_dict()
    assert 'elapsed' not in data
    assert CheckRecord.from_dict(data).instance == 'a2/dual'


def test_report_bundle_counts():
    """Test aggregation over records."""
    bundle = ReportBundle([
        CheckRecord('a', 'x', 'one', PASS),
        CheckRecord('b', 'x', 'one', SKIPPED),
        CheckRecord('c', 'x', 'two', NOT_APPLICABLE),
    ])
    assert bundle.passed
    
    bundle.add(CheckRecord('a', 'x', 'two', FAIL))
    assert not bundle.passed
    assert bundle.counts() == {PASS: 1, FAIL: 1, SKIPPED: 1, NOT_APPLICABLE: 1}
    assert [r.check_id for r in bundle.for_instance('two')] == ['c', 'a']
    assert len(bundle.find('a')) == 2
    assert len(bundle.find('a', 'one')) == 1
    assert ReportBundle.from_dict(bundle.to_dict()).counts() == bundle.counts()
