"""Tests for the verification pipeline and report tasks."""
import pytest
from unittest.mock import patch

from walled_brauer.combinatorics.partitions import lr_coefficient
from walled_brauer.config import override_settings
from walled_brauer.errors import BoundExceeded, RangeError, SizeMismatch
from walled_brauer.orchestration.tasks import dimension_report, run_info, run_verification
from walled_brauer.suites import SUITES, build_suites
from walled_brauer.suites.base import BaseSuite, SuiteFailure
from walled_brauer.suites.branching_suites import LROracleSuite, SemisimpleDimensionSuite
from walled_brauer.types import CellLabel, GenericDelta, Partition


@pytest.fixture(autouse=True)
def default_settings():
    override_settings()
    yield
    override_settings()


def _corrupt_lr(lam, mu, nu):
    return lr_coefficient(lam, mu, nu) + 1


class _CrashingSuite(BaseSuite):
    def get_name(self) -> str:
        return "crashing"

    def check(self, delta0: GenericDelta) -> int:
        raise RuntimeError("boom")


class _FlakySuite(BaseSuite):
    """Fails while delta0 is below 1000."""

    uses_delta = True

    def get_name(self) -> str:
        return "flaky"

    def check(self, delta0: GenericDelta) -> int:
        if delta0.value < 1000:
            raise SuiteFailure("flaky-identity", delta0=str(delta0))
        return 1


def test_dimension_report():
    """Test dimension report fields."""
    report = dimension_report(2, 1, l=1)
    assert report["algebra"] == 6
    assert report["half"] == 2
    assert report["schema"] == 1


def test_dimension_report_cell():
    """Test cell module dimension."""
    report = dimension_report(1, 1, cell=CellLabel(l=0, lam_l=Partition.of(1), lam_r=Partition.of(1)))
    assert report["module"] == 1
    assert report["cell"] == {"l": 0, "lamL": [1], "lamR": [1]}


def test_dimension_report_errors():
    """Test invalid sizes and bounds."""
    with pytest.raises(SizeMismatch):
        dimension_report(-1, 2)
    with pytest.raises(RangeError):
        dimension_report(1, 1, l=2)
    override_settings(max_size=3)
    with pytest.raises(BoundExceeded):
        dimension_report(2, 2)


def test_run_info():
    """Test run info carries the effective settings."""
    info = run_info()
    assert info["delta0"] == "104729"
    assert "version" in info


def test_build_suites():
    """Test every suite is built with the shared options."""
    suites = build_suites("quick", seed=5)
    assert len(suites) == len(SUITES)
    assert all(suite.seed == 5 and not suite.full for suite in suites)
    assert len({suite.get_name() for suite in suites}) == len(suites)


def test_base_suite_is_abstract():
    """Test the base class cannot be instantiated."""
    with pytest.raises(TypeError):
        BaseSuite()


def test_suite_passes():
    """Test a passing suite result."""
    result = SemisimpleDimensionSuite().run()
    assert result.passed
    assert result.checks > 0
    assert result.counterexample is None


def test_delta_retry():
    """Test a delta-dependent suite retries with fresh values."""
    result = _FlakySuite(delta0=GenericDelta(value=101), max_retries=3).run()
    # 101, 607/3 and 405 all stay below the threshold
    assert not result.passed
    assert result.delta0_retries == 2
    assert result.counterexample["identity"] == "flaky-identity"

    result = _FlakySuite(delta0=GenericDelta(value=501), max_retries=3).run()
    assert result.passed
    assert result.delta0_retries == 1


def test_crashing_suite():
    """Test a crash is recorded as an error."""
    result = _CrashingSuite().run()
    assert not result.passed
    assert result.error == "RuntimeError: boom"


@patch("walled_brauer.suites.branching_suites.lr_coefficient", side_effect=_corrupt_lr)
def test_corrupted_lr_is_caught(mock_lr):
    """Test a broken LR coefficient produces a counterexample."""
    result = LROracleSuite().run()
    assert not result.passed
    assert result.counterexample["identity"] == "lr-characters"
    assert result.counterexample["lr"] == result.counterexample["characters"] + 1


@patch("walled_brauer.orchestration.tasks.build_suites")
@patch("walled_brauer.suites.branching_suites.lr_coefficient", side_effect=_corrupt_lr)
def test_run_verification_reports_first_failure(mock_lr, mock_build):
    """Test report layout with one failing and one crashing suite."""
    mock_build.side_effect = lambda level, **kwargs: [
        SemisimpleDimensionSuite(level=level, **kwargs),
        LROracleSuite(level=level, **kwargs),
        _CrashingSuite(level=level, **kwargs),
    ]
    report = run_verification("quick", workers=2)
    assert not report["passed"]
    assert [suite["name"] for suite in report["suites"]] == ["crashing", "lr-oracle", "semisimple-dimension"]
    assert report["first_failure"]["suite"] == "crashing"
    assert report["first_failure"]["error"] == "RuntimeError: boom"
    assert report["suites"][1]["counterexample"]["identity"] == "lr-characters"
    assert "seconds" not in report["suites"][0]


@patch("walled_brauer.orchestration.tasks.build_suites")
def test_run_verification_is_deterministic(mock_build):
    """Test two runs give the same report."""
    mock_build.side_effect = lambda level, **kwargs: [
        LROracleSuite(level=level, **kwargs),
        SemisimpleDimensionSuite(level=level, **kwargs),
    ]
    first = run_verification("quick", seed=3)
    second = run_verification("quick", seed=3)
    assert first == second
    assert first["passed"]
    assert first["first_failure"] is None


def test_quick_verification_passes():
    """Test the full quick pipeline passes."""
    report = run_verification("quick")
    failures = [suite for suite in report["suites"] if not suite["passed"]]
    assert failures == []
    assert report["passed"]
    assert len(report["suites"]) == len(SUITES)
