"""Base contract for verification checks.

Every structural statement the verifier confirms is a Check. Checks read
only from the verification context they are handed and never call each
other; shared results (spaces, centers, Peirce views) are cached on the
context.
"""

from abc import ABC, abstractmethod
from typing import Any, Optional

from src.models.report import ConditionReport


class Check(ABC):
    """Base class for all verification checks.
    
    All checks must:
    1. Have a unique check_id
    2. Name the structural statement they verify in anchor
    3. Implement run() returning a ConditionReport
    
    A check may decline an instance through applies_to(); the verifier then
    records it as skipped with the returned reason.
    """
    
    @property
    @abstractmethod
    def check_id(self) -> str:
        """Get the unique identifier for this check.
        
        Returns:
            Unique check identifier string
        """
        pass
    
    @property
    @abstractmethod
    def anchor(self) -> str:
        """Get the name of the statement this check verifies.
        
        Returns:
            Descriptive statement name, e.g. 'lie-derivations-standard-form'
        """
        pass
    
    def applies_to(self, context: Any) -> Optional[str]:
        """Decide whether the check runs on an instance.
        
        Args:
            context: The verification context
            
        Returns:
            None to run, otherwise the reason for skipping
        """
        return None
    
    @abstractmethod
    def run(self, context: Any) -> ConditionReport:
        """Verify the statement on one instance.
        
        Args:
            context: The verification context
            
        Returns:
            Condition verdicts with witnesses
        """
        pass
