"""
Base Suite Framework

Provides common functionality for the invariant suites behind ``verify``:
- Level-dependent size bounds (quick / full)
- Seeded randomness for sampled checks
- Retry with a fresh delta0 when a matrix check looks degenerate
- Counterexample capture for the report
- Structured logging
"""

import logging
import random
import time
from abc import ABC, abstractmethod
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel

from walled_brauer.algebra.diagrams import WalledDiagram
from walled_brauer.algebra.half_diagrams import HalfDiagram
from walled_brauer.storage.serialize import cell_to_json, diagram_to_json, half_to_json, shape_to_json
from walled_brauer.types import ArcTuple, CellLabel, GenericDelta, SplitShape

logger = logging.getLogger(__name__)

Level = Literal["quick", "full"]


def to_payload(value: Any) -> Any:
    """Best-effort JSON form of a counterexample value."""
    if isinstance(value, WalledDiagram):
        return diagram_to_json(value)
    if isinstance(value, HalfDiagram):
        return half_to_json(value)
    if isinstance(value, CellLabel):
        return cell_to_json(value)
    if isinstance(value, SplitShape):
        return shape_to_json(value)
    if isinstance(value, ArcTuple):
        return list(value.as_tuple())
    if isinstance(value, dict):
        return {str(k): to_payload(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_payload(v) for v in value]
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


class SuiteFailure(Exception):
    """An identity failed on a concrete input."""

    def __init__(self, identity: str, **details: Any):
        super().__init__(identity)
        self.identity = identity
        self.details = {key: to_payload(value) for key, value in details.items()}


class SuiteResult(BaseModel):
    """Outcome of one suite run."""

    name: str
    passed: bool
    checks: int = 0
    seconds: float = 0.0
    delta0: Optional[str] = None
    delta0_retries: int = 0
    counterexample: Optional[Dict[str, Any]] = None
    error: Optional[str] = None


class BaseSuite(ABC):
    """
    Abstract base class for invariant suites.

    Subclasses implement ``check`` and raise SuiteFailure on the first
    violated identity. Suites whose outcome depends on delta0 set
    ``uses_delta`` and get retried with fresh values on failure.
    """

    uses_delta: bool = False

    def __init__(
        self,
        level: Level = "quick",
        delta0: Optional[GenericDelta] = None,
        seed: int = 0,
        sample_size: int = 500,
        max_retries: int = 3,
    ):
        """
        Initialize the suite.

        Args:
            level: "quick" for r,s <= 2 style bounds, "full" for the complete bounds
            delta0: Numeric stand-in for delta in matrix checks
            seed: Seed for sampled checks
            sample_size: Number of random samples at full level
            max_retries: Attempts with fresh delta0 values before reporting a failure
        """
        self.level = level
        self.delta0 = delta0 or GenericDelta(value="104729")
        self.seed = seed
        self.sample_size = sample_size
        self.max_retries = max(1, max_retries)

    @property
    def full(self) -> bool:
        return self.level == "full"

    def rng(self) -> random.Random:
        # one stream per suite so parallel runs stay reproducible
        return random.Random(f"{self.seed}:{self.get_name()}")

    def run(self) -> SuiteResult:
        """Run the checks, retrying with fresh delta0 values where that applies."""
        name = self.get_name()
        started = time.perf_counter()
        delta = self.delta0
        attempts = self.max_retries if self.uses_delta else 1
        failure: Optional[SuiteFailure] = None

        for attempt in range(attempts):
            try:
                checks = self.check(delta)
                logger.info(f"Suite {name} passed ({checks} checks)")
                return SuiteResult(
                    name=name,
                    passed=True,
                    checks=checks,
                    seconds=round(time.perf_counter() - started, 3),
                    delta0=str(delta) if self.uses_delta else None,
                    delta0_retries=attempt,
                )
            except SuiteFailure as f:
                failure = f
                if attempt + 1 < attempts:
                    fresh = delta.next()
                    logger.warning(f"Suite {name} failed {f.identity} at δ0={delta}, retrying with δ0={fresh}")
                    delta = fresh
                    continue
            except Exception as e:
                logger.error(f"Suite {name} crashed: {e}", exc_info=True)
                return SuiteResult(
                    name=name,
                    passed=False,
                    seconds=round(time.perf_counter() - started, 3),
                    error=f"{type(e).__name__}: {e}",
                )

        logger.error(f"Suite {name} failed identity {failure.identity}")
        return SuiteResult(
            name=name,
            passed=False,
            seconds=round(time.perf_counter() - started, 3),
            delta0=str(delta) if self.uses_delta else None,
            delta0_retries=attempts - 1,
            counterexample={"identity": failure.identity, **failure.details},
        )

    @abstractmethod
    def check(self, delta0: GenericDelta) -> int:
        """
        Run every identity of the suite.

        Args:
            delta0: Numeric delta for matrix models (ignored by exact suites)

        Returns:
            Number of individual checks performed

        Raises:
            SuiteFailure: On the first violated identity
        """
        pass

    @abstractmethod
    def get_name(self) -> str:
        """Get the name of this suite for reports."""
        pass
