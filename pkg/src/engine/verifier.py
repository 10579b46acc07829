"""Verification engine: runs registered checks over instances."""

import time
from typing import Dict, Iterable, List, Optional

from src.checks import default_checks
from src.core.check import Check
from src.core.errors import DerivatioError
from src.core.logging import get_logger
from src.engine.context import VerificationContext
from src.models.report import FAIL, PASS, SKIPPED, CheckRecord, ConditionReport, ReportBundle


logger = get_logger('engine')

GATE_CHECK = 'associativity'


def _record(check: Check, context: VerificationContext, report: ConditionReport, elapsed: float) -> CheckRecord:
    verdict = report.verdict
    witnesses: List[str] = []
    if verdict == FAIL:
        for failure in report.failures():
            witnesses.extend(f"{failure.name}: {w}" for w in failure.witnesses)
            if not failure.witnesses:
                witnesses.append(failure.name)
        message = 'failed: ' + ', '.join(f.name for f in report.failures())
    elif verdict == PASS:
        message = f"{len(report.results)} conditions hold"
    else:
        message = report.reason
    return CheckRecord(
        check_id=check.check_id,
        anchor=check.anchor,
        instance=context.name,
        verdict=verdict,
        dimensions=dict(report.dimensions),
        witnesses=witnesses,
        message=message,
        elapsed=elapsed
    )


class Verifier:
    """Runs a suite of checks on verification contexts.
    
    Checks run in registration order. When the associativity gate fails,
    every later check on that instance is recorded as skipped.
    """
    
    def __init__(self, checks: Optional[Iterable[Check]] = None):
        """Initialize the verifier.
        
        Args:
            checks: Checks to register (defaults to the full suite)
        """
        self.checks: Dict[str, Check] = {}
        if checks is None:
            checks = default_checks()
        for check in checks:
            self.register_check(check)
    
    def register_check(self, check: Check) -> None:
        """Register a check.
        
        Args:
            check: Check instance to register
            
        Raises:
            ValueError: If a check with the same id is already registered
        """
        if check.check_id in self.checks:
            raise ValueError(f"Check {check.check_id} is already registered")
        self.checks[check.check_id] = check
    
    def run_check(self, check: Check, context: VerificationContext) -> CheckRecord:
        """Run one check; errors raised by the algebra layer become failures."""
        reason = check.applies_to(context)
        if reason is not None:
            return _record(check, context, ConditionReport.skipped(check.check_id, reason), 0.0)
        started = time.perf_counter()
        try:
            report = check.run(context)
        except DerivatioError as e:
            report = ConditionReport(check.check_id)
            report.add('completed', False, [str(e)])
        return _record(check, context, report, time.perf_counter() - started)
    
    def verify(self, context: VerificationContext) -> ReportBundle:
        """Run every registered check on one instance.
        
        Args:
            context: The instance
            
        Returns:
            One record per registered check, in registration order
        """
        bundle = ReportBundle()
        gate_failed = False
        logger.info(f"Verifying {context.name} (dim {context.algebra.dim})")
        for check in self.checks.values():
            if gate_failed:
                record = _record(check, context, ConditionReport.skipped(check.check_id, f"{GATE_CHECK} failed"), 0.0)
            else:
                record = self.run_check(check, context)
                gate_failed = check.check_id == GATE_CHECK and record.failed
            bundle.add(record)
            if record.failed:
                logger.warning(f"  {record.check_id}: {record.verdict} - {record.message}; {'; '.join(record.witnesses)}")
            else:
                logger.info(f"  {record.check_id}: {record.verdict} ({record.elapsed:.3f}s)")
        counts = bundle.counts()
        logger.info(
            f"{context.name}: {counts[PASS]} passed, {counts[FAIL]} failed, "
            f"{counts[SKIPPED]} skipped in {bundle.total_elapsed():.2f}s"
        )
        return bundle
    
    def verify_all(self, contexts: Iterable[VerificationContext]) -> ReportBundle:
        """Verify instances one after another and collect every record."""
        bundle = ReportBundle()
        for context in contexts:
            bundle.extend(self.verify(context))
        return bundle
