"""
Parallel Suite Executor

Runs independent verification suites on a bounded thread pool.

Key Features:
- Parallel execution with asyncio.gather() over batches of at most max_parallel suites
- Synchronous suite bodies dispatched through loop.run_in_executor
- Error isolation (one failing suite doesn't stop the others)
- No retries: every suite is a deterministic computation

Results are keyed by suite name, so the order in which suites finish never
reaches a report.
"""

import asyncio
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

logger = logging.getLogger(__name__)


class SuiteStatus(Enum):
    """Execution status for a suite."""

    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


@dataclass
class SuiteStep:
    """
    A single suite execution.

    Attributes:
        name: Suite name, unique within one plan
        body: Zero-argument callable computing the suite outcome
    """

    name: str
    body: Callable[[], Any]

    # Runtime state
    status: SuiteStatus = SuiteStatus.PENDING
    result: Any = None
    error: Optional[str] = None
    start_time: Optional[float] = None
    end_time: Optional[float] = None

    @property
    def duration_ms(self) -> Optional[int]:
        """Get execution duration in milliseconds."""
        if self.start_time is not None and self.end_time is not None:
            return int((self.end_time - self.start_time) * 1000)
        return None


@dataclass
class ExecutionResult:
    """
    Result of a suite plan.

    Attributes:
        success: Whether every suite completed without raising
        results: Map of suite name -> outcome for completed suites
        errors: Map of suite name -> error message for failed suites
        total_duration_ms: Total execution time
        step_details: Status and duration of each suite
    """

    success: bool
    results: Dict[str, Any]
    errors: Dict[str, str]
    total_duration_ms: int
    step_details: Dict[str, Dict[str, Any]] = field(default_factory=dict)


class SuiteExecutor:
    """Run suite steps concurrently, at most max_parallel at a time."""

    def __init__(self, max_parallel: int = 4):
        """
        Initialize the executor.

        Args:
            max_parallel: Worker threads, also the batch size of asyncio.gather
        """
        if max_parallel < 1:
            raise ValueError("max_parallel must be at least 1")
        self.max_parallel = max_parallel

    async def execute(self, steps: List[SuiteStep]) -> ExecutionResult:
        """
        Execute every step and collect results and errors.

        Args:
            steps: Suites to run; names must be unique

        Returns:
            ExecutionResult with all completed steps and errors
        """
        names = [step.name for step in steps]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate suite names in plan: {names}")

        start_time = time.time()
        results: Dict[str, Any] = {}
        errors: Dict[str, str] = {}

        with ThreadPoolExecutor(max_workers=self.max_parallel, thread_name_prefix="cotype-suite") as pool:
            for offset in range(0, len(steps), self.max_parallel):
                batch = steps[offset : offset + self.max_parallel]
                logger.info(f"Running {len(batch)} suites in parallel: {', '.join(s.name for s in batch)}")
                batch_results = await asyncio.gather(
                    *[self._execute_step(step, pool) for step in batch],
                    return_exceptions=True,
                )
                for step, result in zip(batch, batch_results):
                    if isinstance(result, BaseException):
                        step.status = SuiteStatus.FAILED
                        step.error = f"{type(result).__name__}: {result}"
                        errors[step.name] = step.error
                        logger.error(f"Suite {step.name} failed: {result}")
                    else:
                        results[step.name] = result

        total_duration_ms = int((time.time() - start_time) * 1000)
        step_details = {
            step.name: {"status": step.status.value, "duration_ms": step.duration_ms, "error": step.error}
            for step in steps
        }
        return ExecutionResult(
            success=not errors,
            results=results,
            errors=errors,
            total_duration_ms=total_duration_ms,
            step_details=step_details,
        )

    async def _execute_step(self, step: SuiteStep, pool: ThreadPoolExecutor) -> Any:
        step.status = SuiteStatus.RUNNING
        step.start_time = time.time()
        loop = asyncio.get_running_loop()
        try:
            result = await loop.run_in_executor(pool, step.body)
        finally:
            step.end_time = time.time()
        step.status = SuiteStatus.COMPLETED
        step.result = result
        return result
