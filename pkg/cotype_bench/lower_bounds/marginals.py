"""
Marginals of scheme kernels and the smoothing witness f(x) = e_x.

For f(x) = e_x in l_1 over the m^n points, E_j f(x) has coordinates
nu_j(x - w), so the smoothing sum does not depend on x and equals

    E_eps (sum_w |sum_j eps_j (nu_j(w + e_j) - nu_j(w - e_j))|)^q.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from cotype_bench.errors import BudgetExceededError, DomainMismatchError, PreconditionError
from cotype_bench.kernels.kernel import Kernel
from cotype_bench.kernels.operators import scheme_kernels
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.torus.functions import format_scalar
from cotype_bench.torus.points import signed_rep

logger = logging.getLogger(__name__)

DELTA_BUDGET = 10**6


@dataclass(frozen=True)
class MarginalDistribution:
    """P(0), ..., P(m-1) of one coordinate."""

    m: int
    probabilities: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.probabilities) != self.m:
            raise PreconditionError(f"need {self.m} probabilities, got {len(self.probabilities)}")
        if any(p < 0 for p in self.probabilities):
            raise PreconditionError("marginal has negative mass")
        if sum(self.probabilities, Fraction(0)) != 1:
            raise PreconditionError("marginal is not normalized")

    def __getitem__(self, r: int) -> Fraction:
        return self.probabilities[r % self.m]

    def jump_variation(self) -> Fraction:
        """sum_z |P(z + 1) - P(z - 1)|."""
        return sum((abs(self[z + 1] - self[z - 1]) for z in range(self.m)), Fraction(0))


def marginal(nu: Kernel, j: int) -> MarginalDistribution:
    if not 0 <= j < nu.n:
        raise PreconditionError(f"coordinate {j} is outside range({nu.n})")
    masses = [Fraction(0)] * nu.m
    for coords, weight in nu.weights.items():
        masses[coords[j]] += weight
    return MarginalDistribution(nu.m, tuple(masses))


def marginal_variation(kernels: Sequence[Kernel]) -> Fraction:
    """(1/n) sum_j sum_z |P_j(nu_j)(z + 1) - P_j(nu_j)(z - 1)|."""
    n = len(kernels)
    return sum((marginal(nu, j).jump_variation() for j, nu in enumerate(kernels)), Fraction(0)) / n


def tail_mass(kernels: Sequence[Kernel], s: int) -> Fraction:
    """(1/n) sum_j nu_j({x : |x_j| > s})."""
    if s < 0:
        raise PreconditionError(f"s must be nonnegative, got {s}")
    n = len(kernels)
    total = Fraction(0)
    for j, nu in enumerate(kernels):
        total += sum((w for c, w in nu.weights.items() if abs(signed_rep(c[j], nu.m)) > s), Fraction(0))
    return total / n


def kernel_table(nu: Kernel) -> np.ndarray:
    """Dense object array of the kernel's weights."""
    table = np.full((nu.m,) * nu.n, Fraction(0), dtype=object)
    for coords, weight in nu.weights.items():
        table[coords] = weight
    return table


@dataclass
class DeltaSmoothingReport:
    """
    Smoothing quantities of the witness f(x) = e_x.

    Attributes:
        lhs: E_eps ||...||_1^q
        lhs_first_moment: The same with q = 1
        per_coordinate: sum_w |nu_j(w - e_j) - nu_j(w + e_j)| for each j
        marginal_bound: sum_r |P_j(nu_j)(r - 1) - P_j(nu_j)(r + 1)| for each j
    """

    q: int
    lhs: Fraction
    lhs_first_moment: Fraction
    per_coordinate: List[Fraction] = field(default_factory=list)
    marginal_bound: List[Fraction] = field(default_factory=list)

    @property
    def chain_holds(self) -> bool:
        """lhs >= lhs_1^q, 2 lhs_1^2 >= sum_j per_j^2 and per_j >= marginal_j."""
        projections = all(p >= b for p, b in zip(self.per_coordinate, self.marginal_bound))
        moments = self.lhs >= self.lhs_first_moment**self.q
        khintchine = 2 * self.lhs_first_moment**2 >= sum((p * p for p in self.per_coordinate), Fraction(0))
        return projections and moments and khintchine

    def quantities(self) -> Dict[str, Any]:
        return {
            "lhs": format_scalar(self.lhs),
            "lhs_first_moment": format_scalar(self.lhs_first_moment),
            "per_coordinate": [format_scalar(v) for v in self.per_coordinate],
            "marginal_bound": [format_scalar(v) for v in self.marginal_bound],
        }


def delta_smoothing_value(
    params: SchemeParams, kernels: Sequence[Kernel] = (), budget: int = DELTA_BUDGET
) -> DeltaSmoothingReport:
    """Smoothing left side for f(x) = e_x and its per-coordinate lower bounds, exactly."""
    n, m = params.n, params.m
    if m**n * 2**n > budget:
        raise BudgetExceededError(f"m^n 2^n = {m ** n * 2 ** n} exceeds the budget of {budget}")
    if int(params.q) != params.q:
        raise PreconditionError(f"the witness needs an integer q, got {params.q}")
    q = int(params.q)
    kernels = list(kernels) or list(scheme_kernels(params))
    if len(kernels) != n or any((nu.m, nu.n) != (m, n) for nu in kernels):
        raise DomainMismatchError("kernels do not match the parameters")

    differences = []
    for j, nu in enumerate(kernels):
        table = kernel_table(nu)
        differences.append(np.roll(table, -1, axis=j) - np.roll(table, 1, axis=j))

    lhs = Fraction(0)
    first = Fraction(0)
    for signs in itertools.product((-1, 1), repeat=n):
        combined = differences[0] * signs[0]
        for sign, difference in zip(signs[1:], differences[1:]):
            combined = combined + difference * sign
        norm = sum(np.abs(combined).flat, Fraction(0))
        lhs += norm**q
        first += norm
    count = 2**n
    report = DeltaSmoothingReport(
        q=q,
        lhs=lhs / count,
        lhs_first_moment=first / count,
        per_coordinate=[sum(np.abs(d).flat, Fraction(0)) for d in differences],
        marginal_bound=[marginal(nu, j).jump_variation() for j, nu in enumerate(kernels)],
    )
    if not report.chain_holds:
        logger.warning("delta smoothing chain fails for %s: %s", params, report.quantities())
    logger.debug("delta smoothing %s: %s", params, report.quantities())
    return report
