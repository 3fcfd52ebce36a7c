"""
Suite reports.

A report has a fixed shape

    {"suite", "params", "quantities", "checks": [{"name", "status", "detail"}], "tolerance", "timing_ms"}

with every rational written as a "num/den" string. Everything except
timing_ms is a function of the configuration, so two runs with the same
seed produce the same bytes up to that field.
"""

import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from numbers import Rational
from pathlib import Path
from typing import Any, Dict, Iterable, List, Literal, Mapping, Optional, Union

import numpy as np
from pydantic import BaseModel, Field

from cotype_bench.torus.functions import FLOAT_TOLERANCE, format_scalar

logger = logging.getLogger(__name__)

Status = Literal["passed", "failed", "skipped"]


def to_jsonable(value: Any) -> Any:
    """Rationals to "num/den", numpy scalars to Python numbers, containers recursively."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (Rational, float, np.floating)):
        return format_scalar(value)
    if isinstance(value, Mapping):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(item) for item in value]
    return str(value)


class CheckResult(BaseModel):
    """One named verification outcome."""

    name: str
    status: Status
    detail: Dict[str, Any] = Field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status == "failed"


class SuiteReport(BaseModel):
    """The JSON document written for one run."""

    suite: str
    params: Dict[str, Any] = Field(default_factory=dict)
    quantities: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    tolerance: Optional[float] = None
    timing_ms: int = 0

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if check.failed]

    @property
    def exit_status(self) -> int:
        """1 iff a check failed."""
        return 1 if self.failures else 0


@dataclass
class SuiteOutcome:
    """Quantities and checks collected by a suite body."""

    quantities: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)

    def quantity(self, name: str, value: Any) -> None:
        self.quantities[name] = to_jsonable(value)

    def check(self, name: str, ok: bool, **detail: Any) -> bool:
        status: Status = "passed" if ok else "failed"
        self.checks.append(CheckResult(name=name, status=status, detail=to_jsonable(detail)))
        if not ok:
            logger.warning("check %s failed: %s", name, detail)
        return ok

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(CheckResult(name=name, status="skipped", detail={"reason": reason}))

    def extend(self, prefix: str, other: "SuiteOutcome") -> None:
        """Merge another outcome, namespacing its entries as prefix/name."""
        for name, value in other.quantities.items():
            self.quantities[f"{prefix}/{name}"] = value
        for check in other.checks:
            self.checks.append(check.model_copy(update={"name": f"{prefix}/{check.name}"}))


def failed_suite(name: str, error: str) -> SuiteOutcome:
    """The outcome of a suite body that raised."""
    outcome = SuiteOutcome()
    outcome.check(name, False, error=error)
    return outcome


def build_report(
    suite: str,
    params: Dict[str, Any],
    outcome: SuiteOutcome,
    float_mode: bool,
    timing_ms: int = 0,
) -> SuiteReport:
    return SuiteReport(
        suite=suite,
        params=to_jsonable(params),
        quantities=outcome.quantities,
        checks=outcome.checks,
        tolerance=FLOAT_TOLERANCE if float_mode else None,
        timing_ms=timing_ms,
    )


def emit_report(report: SuiteReport) -> str:
    """Serialize a report; field order is the declaration order, so timing_ms is last."""
    return json.dumps(report.model_dump(mode="json"), indent=2) + "\n"


def strip_timing(text: str) -> str:
    """The report text without its timing field, for determinism comparisons."""
    document = json.loads(text)
    document.pop("timing_ms", None)
    return json.dumps(document, indent=2)


def write_atomic(path: Union[str, Path], text: str) -> Path:
    """Write text next to path and rename it into place."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    logger.info("wrote %s", path)
    return path


def summarize(checks: Iterable[CheckResult]) -> Dict[str, int]:
    counts = {"passed": 0, "failed": 0, "skipped": 0}
    for check in checks:
        counts[check.status] += 1
    return counts
