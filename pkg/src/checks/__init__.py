"""Verification checks, one class per structural statement."""

from typing import List

from src.checks.blocks import DerBlockCheck, FeasibilityCheck, GMapCheck, LieBlockCheck
from src.checks.center import CenterFormCheck, SourceCycleCheck, WLowerBoundCheck
from src.checks.criteria import FaithfulCriterionCheck, OnePointShapeCheck, ZeroPairingCriterionCheck
from src.checks.fixture_maps import FixtureMapCheck
from src.checks.standard_form import CentralImageCheck, PathAgreementCheck, StandardSplitCheck, UniquenessCheck
from src.checks.structure import (
    AssociativityCheck, BlockClosureCheck, DerivationOracleCheck, InclusionCheck, PairingLawCheck
)
from src.core.check import Check


def default_checks() -> List[Check]:
    """The full suite in run order."""
    return [
        AssociativityCheck(),
        BlockClosureCheck(),
        PairingLawCheck(),
        DerivationOracleCheck(),
        InclusionCheck(),
        StandardSplitCheck(),
        UniquenessCheck(),
        CentralImageCheck(),
        PathAgreementCheck(),
        CenterFormCheck(),
        WLowerBoundCheck(),
        SourceCycleCheck(),
        LieBlockCheck(),
        DerBlockCheck(),
        FeasibilityCheck(),
        GMapCheck(),
        OnePointShapeCheck(),
        ZeroPairingCriterionCheck(),
        FaithfulCriterionCheck(),
        FixtureMapCheck(),
    ]
