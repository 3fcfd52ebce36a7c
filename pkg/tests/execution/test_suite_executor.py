"""
Tests for SuiteExecutor and the suite registry.

Tests cover:
1. Parallel execution (independent suites run concurrently)
2. Error isolation (one failing suite does not stop the others)
3. Batching by max_parallel
4. Plan validation
5. Registration order of the built-in suites
"""

import threading
import time

import pytest

from cotype_bench import suites  # noqa: F401
from cotype_bench.execution.suite_executor import SuiteExecutor, SuiteStatus, SuiteStep
from cotype_bench.registry import SuiteRegistry, registry


def slow_suite(label: str, delay: float = 0.3):
    def body():
        time.sleep(delay)
        return {"suite": label}

    return body


def failing_suite():
    raise RuntimeError("Simulated failure")


@pytest.mark.asyncio
async def test_parallel_execution_speed():
    """
    Test that independent suites run in parallel.

    3 suites that each take 0.3s should complete in well under 0.9s.
    """
    executor = SuiteExecutor(max_parallel=3)
    steps = [SuiteStep(name=f"suite{i}", body=slow_suite(f"suite{i}")) for i in range(3)]

    start = time.time()
    result = await executor.execute(steps)
    duration = time.time() - start

    assert result.success
    assert duration < 0.8, f"Expected parallel execution, took {duration:.2f}s"
    assert result.results == {f"suite{i}": {"suite": f"suite{i}"} for i in range(3)}
    assert all(step.status is SuiteStatus.COMPLETED for step in steps)

    print(f"* Parallel execution: 3 suites in {duration:.2f}s")


@pytest.mark.asyncio
async def test_error_isolation():
    """Test that a failing suite is reported and the others still complete."""
    executor = SuiteExecutor(max_parallel=2)
    steps = [
        SuiteStep(name="good", body=slow_suite("good", 0.05)),
        SuiteStep(name="bad", body=failing_suite),
        SuiteStep(name="later", body=slow_suite("later", 0.05)),
    ]

    result = await executor.execute(steps)

    assert not result.success
    assert set(result.results) == {"good", "later"}
    assert result.errors == {"bad": "RuntimeError: Simulated failure"}
    assert result.step_details["bad"]["status"] == "failed"
    assert result.step_details["good"]["status"] == "completed"
    assert result.step_details["good"]["duration_ms"] is not None

    print("* Error isolation: failure recorded, other suites complete")


@pytest.mark.asyncio
async def test_batching_limits_concurrency():
    """Test that no more than max_parallel suites run at once."""
    lock = threading.Lock()
    state = {"running": 0, "peak": 0}

    def tracked():
        with lock:
            state["running"] += 1
            state["peak"] = max(state["peak"], state["running"])
        time.sleep(0.05)
        with lock:
            state["running"] -= 1
        return True

    executor = SuiteExecutor(max_parallel=2)
    result = await executor.execute([SuiteStep(name=f"s{i}", body=tracked) for i in range(5)])

    assert result.success
    assert state["peak"] <= 2
    assert len(result.results) == 5

    print(f"* Batching: peak concurrency {state['peak']}")


@pytest.mark.asyncio
async def test_plan_validation():
    """Test duplicate names and the worker count."""
    executor = SuiteExecutor()

    with pytest.raises(ValueError):
        await executor.execute([SuiteStep(name="x", body=lambda: 1), SuiteStep(name="x", body=lambda: 2)])
    with pytest.raises(ValueError):
        SuiteExecutor(max_parallel=0)

    empty = await executor.execute([])
    assert empty.success
    assert empty.results == {}


def test_registry():
    """Test registration, lookup and the order of the built-in suites."""
    local = SuiteRegistry()
    local.register("first", lambda config: None, "one")
    local.register("second", lambda config: None)
    local.register("first", lambda config: 1, "again")

    assert local.list_suites() == ["first", "second"]
    assert local.get("first").description == "again"
    assert local.get("missing") is None
    assert not local.is_registered("missing")

    assert registry.list_suites() == ["bernoulli", "identities", "cotype", "scheme", "lower-bounds", "symmetrize"]

    print("* Registry: six built-in suites in order")
