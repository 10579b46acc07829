"""Verification results.

``ConditionReport`` is what the algebra-level checkers return (one verdict
per named condition, with witnesses). ``CheckRecord`` and ``ReportBundle``
are what the verification engine emits.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'
NOT_APPLICABLE = 'not-applicable'

VERDICTS = (PASS, FAIL, SKIPPED, NOT_APPLICABLE)


@dataclass
class ConditionResult:
    """Verdict of one named condition.
    
    Attributes:
        name: Condition name, e.g. 'tau2-module-laws'
        passed: Whether the condition holds on every tested basis tuple
        witnesses: Human-readable descriptions of failing (or exhibiting) tuples
    """
    name: str
    passed: bool
    witnesses: List[str] = field(default_factory=list)
    
    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'passed': self.passed, 'witnesses': list(self.witnesses)}


@dataclass
class ConditionReport:
    """A group of condition verdicts.
    
    Attributes:
        title: What was checked
        results: One entry per condition, in a fixed order
        status: PASS/FAIL derived from results unless set to SKIPPED or NOT_APPLICABLE
        reason: Why a check was skipped
        dimensions: Dimensions worth reporting alongside the verdicts
    """
    title: str
    results: List[ConditionResult] = field(default_factory=list)
    status: Optional[str] = None
    reason: str = ''
    dimensions: Dict[str, int] = field(default_factory=dict)
    
    def add(self, name: str, passed: bool, witnesses: Optional[List[str]] = None) -> ConditionResult:
        result = ConditionResult(name, passed, list(witnesses or []))
        self.results.append(result)
        return result
    
    @property
    def verdict(self) -> str:
        if self.status is not None:
            return self.status
        return PASS if all(r.passed for r in self.results) else FAIL
    
    @property
    def passed(self) -> bool:
        return self.verdict == PASS
    
    def result(self, name: str) -> ConditionResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(f"No condition named '{name}' in {self.title}")
    
    def failures(self) -> List[ConditionResult]:
        return [r for r in self.results if not r.passed]
    
    def to_dict(self) -> Dict[str, Any]:
        return {
            'title': self.title,
            'verdict': self.verdict,
            'reason': self.reason,
            'dimensions': dict(sorted(self.dimensions.items())),
            'conditions': [r.to_dict() for r in self.results],
        }
    
    @classmethod
    def skipped(cls, title: str, reason: str) -> 'ConditionReport':
        return cls(title, status=SKIPPED, reason=reason)


@dataclass
class CheckRecord:
    """One verified statement on one instance.
    
    Attributes:
        check_id: Identifier of the check
        anchor: Name of the structural statement being verified
        instance: Name of the algebra instance (e.g. 'star_tree/dual')
        verdict: One of VERDICTS
        dimensions: Dimensions computed along the way
        witnesses: Witnesses for failures or for named elements
        message: Short explanation
        elapsed: Wall time in seconds (not serialised)
    """
    check_id: str
    anchor: str
    instance: str
    verdict: str
    dimensions: Dict[str, int] = field(default_factory=dict)
    witnesses: List[str] = field(default_factory=list)
    message: str = ''
    elapsed: float = 0.0
    
    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"Check {self.check_id}: verdict must be one of {VERDICTS}, got '{self.verdict}'")
    
    @property
    def failed(self) -> bool:
        return self.verdict == FAIL
    
    def to_dict(self) -> Dict[str, Any]:
        """Serialisable form; elapsed time is left out so output is reproducible."""
        return {
            'check': self.check_id,
            'anchor': self.anchor,
            'instance': self.instance,
            'verdict': self.verdict,
            'dimensions': dict(sorted(self.dimensions.items())),
            'witnesses': list(self.witnesses),
            'message': self.message,
        }
    
    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CheckRecord':
        return cls(
            check_id=data['check'],
            anchor=data['anchor'],
            instance=data['instance'],
            verdict=data['verdict'],
            dimensions=dict(data.get('dimensions', {})),
            witnesses=list(data.get('witnesses', [])),
            message=data.get('message', '')
        )


class ReportBundle:
    """Ordered collection of check records."""
    
    def __init__(self, records: Optional[List[CheckRecord]] = None):
        self.records: List[CheckRecord] = list(records or [])
    
    def add(self, record: CheckRecord) -> None:
        self.records.append(record)
    
    def extend(self, other: 'ReportBundle') -> None:
        self.records.extend(other.records)
    
    @property
    def passed(self) -> bool:
        """True iff no record failed (skipped and not-applicable do not count)."""
        return not any(r.failed for r in self.records)
    
    def failures(self) -> List[CheckRecord]:
        return [r for r in self.records if r.failed]
    
    def counts(self) -> Dict[str, int]:
        counts = {verdict: 0 for verdict in VERDICTS}
        for record in self.records:
            counts[record.verdict] += 1
        return counts
    
    def for_instance(self, instance: str) -> List[CheckRecord]:
        return [r for r in self.records if r.instance == instance]
    
    def find(self, check_id: str, instance: Optional[str] = None) -> List[CheckRecord]:
        return [
            r for r in self.records
            if r.check_id == check_id and (instance is None or r.instance == instance)
        ]
    
    def total_elapsed(self) -> float:
        return sum(r.elapsed for r in self.records)
    
    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'counts': self.counts(),
            'records': [r.to_dict() for r in self.records],
        }
    
    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ReportBundle':
        return cls([CheckRecord.from_dict(r) for r in data.get('records', [])])
    
    def __len__(self) -> int:
        return len(self.records)
