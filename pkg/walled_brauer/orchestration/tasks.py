"""
Task Orchestration

Builds the reports behind each CLI command:
1. Dimensions of B_{r,s}, V^l and cell modules
2. Products and twisted tensor products of stored elements
3. Restriction reports and structure-constant tables
4. The verification pipeline (invariant suites run in parallel)
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Dict, List, Optional

from walled_brauer import __version__
from walled_brauer.algebra.diagrams import basis_dimension, multiply
from walled_brauer.algebra.half_diagrams import dim_half
from walled_brauer.algebra.tensor import embed_rho
from walled_brauer.config import get_settings
from walled_brauer.errors import BoundExceeded, SizeMismatch
from walled_brauer.representations.branching import cell_dimension, restriction_terms
from walled_brauer.representations.grothendieck import structure_constants
from walled_brauer.storage.serialize import (
    SCHEMA_VERSION,
    cell_to_json,
    element_to_json,
    load_element,
    restriction_report,
    structure_table,
)
from walled_brauer.suites import SuiteResult, build_suites
from walled_brauer.suites.base import Level
from walled_brauer.types import CellLabel, GenericDelta, SplitShape

logger = logging.getLogger(__name__)


def run_info() -> Dict[str, Any]:
    """Version and effective settings, attached to verification reports."""
    settings = get_settings()
    return {
        "version": __version__,
        "max_size": settings.max_size,
        "oracle_max_size": settings.oracle_max_size,
        "delta0": settings.delta0,
        "seed": settings.seed,
    }


def dimension_report(r: int, s: int, l: Optional[int] = None, cell: Optional[CellLabel] = None) -> Dict[str, Any]:
    """
    Dimensions of B_{r,s} and, on request, of V^l_{r,s} or Δ_{r,s}(cell).

    Raises:
        SizeMismatch: If r or s is negative.
        BoundExceeded: If r+s exceeds the configured bound.
        RangeError: If l is outside 0..min(r, s).
        ShapeMismatch: If the cell does not belong to B_{r,s}.
    """
    if r < 0 or s < 0:
        raise SizeMismatch(f"Side sizes must be nonnegative, got r={r}, s={s}")
    bound = get_settings().max_size
    if r + s > bound:
        raise BoundExceeded(f"B_{{{r},{s}}} exceeds the bound r+s <= {bound}")

    report: Dict[str, Any] = {"schema": SCHEMA_VERSION, "r": r, "s": s, "algebra": basis_dimension(r, s)}
    if l is not None:
        report["l"] = l
        report["half"] = dim_half(r, s, l)
    if cell is not None:
        report["cell"] = cell_to_json(cell)
        report["module"] = cell_dimension(r, s, cell)
    logger.debug(f"Dimension report for B_{{{r},{s}}}: {report}")
    return report


def multiply_files(file_x: str, file_y: str) -> Dict[str, Any]:
    """Exact product of two stored elements."""
    x, y = load_element(file_x), load_element(file_y)
    product = multiply(x, y)
    logger.info(f"Multiplied elements of B_{{{x.r},{x.s}}}: {len(product.terms)} terms")
    return element_to_json(product)


def twist_files(file_x: str, file_y: str) -> Dict[str, Any]:
    """Twisted tensor product of two stored elements."""
    x, y = load_element(file_x), load_element(file_y)
    image = embed_rho(x, y)
    logger.info(f"Embedded B_{{{x.r},{x.s}}} (x) B_{{{y.r},{y.s}}} into B_{{{image.r},{image.s}}}")
    return element_to_json(image)


def restriction_task(shape: SplitShape, cell: CellLabel) -> Dict[str, Any]:
    return restriction_report(shape, cell, restriction_terms(shape, cell))


def structure_task(shape: SplitShape, nu1: CellLabel, nu2: CellLabel) -> Dict[str, Any]:
    return structure_table(shape, nu1, nu2, structure_constants(shape, nu1, nu2))


def run_verification(
    level: Level = "quick",
    delta0: Optional[GenericDelta] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> Dict[str, Any]:
    """
    Run every invariant suite and assemble the report.

    Suites run in a thread pool; results are sorted by suite name so the
    report does not depend on completion order. A crashing suite is
    recorded as failed and does not stop the others.

    Args:
        level: "quick" or "full"
        delta0: Numeric delta for matrix checks (defaults to the setting)
        seed: Seed for sampled checks (defaults to the setting)
        workers: Thread count (defaults to the setting)

    Returns:
        Report dictionary with per-suite results and the first counterexample
    """
    settings = get_settings()
    delta0 = delta0 or GenericDelta(value=settings.delta0)
    seed = settings.seed if seed is None else seed
    workers = workers or settings.verify_workers

    suites = build_suites(
        level,
        delta0=delta0,
        seed=seed,
        sample_size=settings.sample_size,
        max_retries=settings.delta0_retries,
    )
    logger.info(f"Starting verification: level={level}, {len(suites)} suites, {workers} workers, δ0={delta0}")

    results: List[SuiteResult] = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(suite.run): suite.get_name() for suite in suites}

        for future in as_completed(futures):
            name = futures[future]
            try:
                results.append(future.result())
            except Exception as e:
                logger.error(f"Suite task {name} failed: {e}")
                results.append(SuiteResult(name=name, passed=False, error=f"{type(e).__name__}: {e}"))

    results.sort(key=lambda result: result.name)
    failed = [result for result in results if not result.passed]
    first_failure = None
    if failed:
        first = failed[0]
        first_failure = {"suite": first.name, "counterexample": first.counterexample, "error": first.error}

    logger.info(f"Verification finished: {len(results) - len(failed)}/{len(results)} suites passed")
    return {
        "schema": SCHEMA_VERSION,
        "level": level,
        "seed": seed,
        "delta0": str(delta0),
        "passed": not failed,
        "suites": [result.model_dump(exclude={"seconds"}) for result in results],
        "first_failure": first_failure,
        "run": run_info(),
    }
