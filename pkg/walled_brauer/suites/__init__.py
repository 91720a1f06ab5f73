"""Invariant suites run by ``verify``."""

from typing import List, Optional, Type

from walled_brauer.suites.algebra_suites import (
    AlgebraSoundnessSuite,
    HalfModuleSuite,
    IdempotentSuite,
    PropagationMonotonicitySuite,
    TwistedEmbeddingSuite,
)
from walled_brauer.suites.base import BaseSuite, Level, SuiteFailure, SuiteResult
from walled_brauer.suites.branching_suites import (
    FiltrationOrderSuite,
    LROracleSuite,
    RestrictionDimensionSuite,
    RingPropertiesSuite,
    SemisimpleDimensionSuite,
)
from walled_brauer.suites.oracle_suites import HomSpaceSuite, StructureConstantSuite
from walled_brauer.types import GenericDelta

SUITES: List[Type[BaseSuite]] = [
    AlgebraSoundnessSuite,
    PropagationMonotonicitySuite,
    TwistedEmbeddingSuite,
    HalfModuleSuite,
    IdempotentSuite,
    LROracleSuite,
    SemisimpleDimensionSuite,
    RestrictionDimensionSuite,
    FiltrationOrderSuite,
    StructureConstantSuite,
    HomSpaceSuite,
    RingPropertiesSuite,
]


def build_suites(
    level: Level,
    delta0: Optional[GenericDelta] = None,
    seed: int = 0,
    sample_size: int = 500,
    max_retries: int = 3,
) -> List[BaseSuite]:
    return [
        suite(level=level, delta0=delta0, seed=seed, sample_size=sample_size, max_retries=max_retries)
        for suite in SUITES
    ]


__all__ = ["BaseSuite", "SuiteFailure", "SuiteResult", "SUITES", "build_suites"]
