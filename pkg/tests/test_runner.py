"""
Tests for running configured suites without the command line.

Tests cover:
1. run_suite on a single suite
2. A suite body that raises becomes one failed check
3. Suite selection for "all"
4. The cotype suite at its acceptance scale
"""

from fractions import Fraction

from cotype_bench.configuration import load_run_config
from cotype_bench.metrics.baselines import METRIC_COTYPE_RATIO_BOUND
from cotype_bench.registry import RegisteredSuite, registry
from cotype_bench.runner import run_suite, suite_names


def test_run_suite_bernoulli():
    """Test a passing bernoulli run through the executor."""
    config = load_run_config(overrides={"suite": "bernoulli", "bernoulli_n": 4, "threads": 1}, environ={})

    report = run_suite(config)

    assert report.suite == "bernoulli"
    assert report.exit_status == 0
    assert report.tolerance is None
    assert report.checks

    print(f"* run_suite: {len(report.checks)} bernoulli checks, none failed")


def test_run_suite_isolates_errors(monkeypatch):
    """Test that an exception in a suite body is reported, not raised."""

    def broken(config):
        raise RuntimeError("Simulated failure")

    monkeypatch.setitem(registry._suites, "bernoulli", RegisteredSuite("bernoulli", broken))
    config = load_run_config(overrides={"suite": "bernoulli"}, environ={})

    report = run_suite(config)

    assert report.exit_status == 1
    assert [check.name for check in report.failures] == ["bernoulli"]
    assert "Simulated failure" in report.failures[0].detail["error"]

    print("* run_suite: a raising suite body gives exit status 1")


def test_suite_names_for_all():
    """Test that "all" selects every registered suite in registration order."""
    config = load_run_config(overrides={"suite": "all", "seed": 0}, environ={})

    assert suite_names(config) == registry.list_suites()
    assert "all" not in suite_names(config)


def test_cotype_on_z20_squared():
    """Test 100 seeded functions on Z_20^2 against the frozen ratio bound."""
    config = load_run_config(
        overrides={"suite": "cotype", "n": 2, "m": 20, "k": 3, "q": 2, "seed": 11, "functions": 100, "threads": 1},
        environ={},
    )

    report = run_suite(config)

    assert report.exit_status == 0, report.failures
    assert report.quantities["functions"] == 100
    assert Fraction(report.quantities["max_ratio"]) <= METRIC_COTYPE_RATIO_BOUND
    statuses = {check.name: check.status for check in report.checks}
    for name in ("translation_invariance", "permutation_invariance", "ratio_bound", "triangle", "ell1"):
        assert statuses[name] == "passed"

    print(f"* cotype on Z_20^2: max ratio {report.quantities['max_ratio']} over 100 functions")
