"""
The metric cotype inequality on Z_m^n.

For f: Z_m^n -> X the left side is sum_j E_x ||f(x + (m/2) e_j) - f(x)||^q and
the right side is m^q E ||f(x + eps) - f(x)||^q with x uniform on the torus
and eps uniform on {-1, 0, 1}^n.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from cotype_bench.errors import PreconditionError
from cotype_bench.torus.functions import NormSpec, Scalar, ScalarMode, TorusFunction, format_scalar
from cotype_bench.torus.measures import table_mean
from cotype_bench.torus.points import TorusPoint, mixed_signs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CotypeReport:
    """
    Raw sums of one metric cotype evaluation.

    Attributes:
        lhs: Diagonal-shift increments
        rhs: m^q times the averaged l_infinity edge increments
        ratio: lhs / rhs, None when rhs is 0
        params: Echo of (n, m, p, q, d)
        function: Descriptor of f
    """

    lhs: Scalar
    rhs: Scalar
    ratio: Optional[Scalar]
    params: Dict[str, Any] = field(default_factory=dict)
    function: str = ""

    def quantities(self) -> Dict[str, Any]:
        return {
            "lhs": format_scalar(self.lhs),
            "rhs": format_scalar(self.rhs),
            "ratio": format_scalar(self.ratio),
        }


def increment_mean(f: TorusFunction, offset, spec: NormSpec):
    """E_x ||f(x + offset) - f(x)||^q."""
    return table_mean((f.translate(offset) - f).norm_power_table(spec))


def diagonal_increments(f: TorusFunction, spec: NormSpec):
    """sum_j E_x ||f(x + (m/2) e_j) - f(x)||^q."""
    total = None
    for j in range(f.n):
        term = increment_mean(f, TorusPoint.basis(f.n, j, f.m, f.m // 2), spec)
        total = term if total is None else total + term
    return total


def edge_increments(f: TorusFunction, spec: NormSpec):
    """E over sigma x mu of ||f(x + eps) - f(x)||^q."""
    total = None
    count = 0
    for eps in mixed_signs(f.n):
        term = increment_mean(f, eps, spec)
        total = term if total is None else total + term
        count += 1
    return total / count


def metric_cotype_ratio(f: TorusFunction, spec: NormSpec, descriptor: str = "") -> CotypeReport:
    if f.m % 2:
        raise PreconditionError(f"m must be even, got {f.m}")
    lhs = diagonal_increments(f, spec)
    rhs = spec.power(f.m, f.mode) * edge_increments(f, spec)
    ratio = None if rhs == 0 else lhs / rhs
    if f.mode is ScalarMode.FLOAT:
        lhs, rhs = float(lhs), float(rhs)
    logger.debug("metric cotype n=%d m=%d: lhs=%s rhs=%s", f.n, f.m, lhs, rhs)
    return CotypeReport(
        lhs=lhs,
        rhs=rhs,
        ratio=ratio,
        params={"n": f.n, "m": f.m, "d": f.d, **spec.describe()},
        function=descriptor,
    )
