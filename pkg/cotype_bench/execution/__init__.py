"""Parallel execution of independent verification suites."""

from cotype_bench.execution.suite_executor import ExecutionResult, SuiteExecutor, SuiteStatus, SuiteStep

__all__ = ["ExecutionResult", "SuiteExecutor", "SuiteStatus", "SuiteStep"]
