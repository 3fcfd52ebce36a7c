"""
The law of Z = |xi_1 + ... + xi_n| for i.i.d. xi_i in {-1, 0, 1} with
P(xi = 0) = (k-1)/(k+1) and P(xi = 1) = P(xi = -1) = 1/(k+1).

With p = 2/(k+1): E[Z^2] = np and E[Z^4] = np + 3n(n-1)p^2.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

import numpy as np

from cotype_bench.errors import PreconditionError
from cotype_bench.identities.counting import k_counts
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.kernels.point_sets import iter_odd_box

logger = logging.getLogger(__name__)


def _check(n: int, k: int) -> None:
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if k < 1 or k % 2 == 0:
        raise PreconditionError(f"k must be a positive odd integer, got {k}")


@dataclass(frozen=True)
class LatticeWalkDistribution:
    """
    Exact law of Z stored as integer counts out of (k+1)^n.

    Attributes:
        n: Number of steps
        k: Box half-width
        counts: counts[z] = (k+1)^n P(Z = z) for z = 0..n
    """

    n: int
    k: int
    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return (self.k + 1) ** self.n

    @property
    def p(self) -> Fraction:
        return Fraction(2, self.k + 1)

    def probability(self, z: int) -> Fraction:
        return Fraction(self.counts[z], self.total)

    def moment(self, power: int) -> Fraction:
        return Fraction(sum(c * z**power for z, c in enumerate(self.counts)), self.total)


def walk_distribution(n: int, k: int) -> LatticeWalkDistribution:
    """Dynamic programming over the partial sums, O(n^2) integer operations."""
    _check(n, k)
    # index s + n holds the number of weighted paths with partial sum s
    sums = np.zeros(2 * n + 1, dtype=object)
    sums[n] = 1
    for _ in range(n):
        sums = np.roll(sums, 1) + np.roll(sums, -1) + sums * (k - 1)
    counts = [sums[n]] + [sums[n + z] + sums[n - z] for z in range(1, n + 1)]
    return LatticeWalkDistribution(n, k, tuple(int(c) for c in counts))


def expected_abs_sum(n: int, k: int) -> Fraction:
    return walk_distribution(n, k).moment(1)


def moments(n: int, k: int) -> Tuple[Fraction, Fraction]:
    """(E[Z^2], E[Z^4]) from the exact law."""
    law = walk_distribution(n, k)
    return law.moment(2), law.moment(4)


def closed_form_moments(n: int, k: int) -> Tuple[Fraction, Fraction]:
    _check(n, k)
    p = Fraction(2, k + 1)
    return n * p, n * p + 3 * n * (n - 1) * p * p


def abs_sum_scale(n: int, k: int) -> float:
    """min(sqrt(np), np)."""
    np_ = 2 * n / (k + 1)
    return min(math.sqrt(np_), np_)


def odd_box_abs_sum(n: int, k: int) -> Dict[str, Fraction]:
    """sum over the all-odd box of |pMmk(y)| under both normalizations.

    "uniform" divides by (k+1)^n and equals E[Z]; "box" divides by k(k+1)^(n-1).
    """
    _check(n, k)
    params = SchemeParams(n=n, m=2 * k + 2, k=k)
    total = sum(abs(k_counts(y, params).pMmk) for y in iter_odd_box(params))
    return {
        "sum": Fraction(total),
        "uniform": Fraction(total, (k + 1) ** n),
        "box": Fraction(total, k * (k + 1) ** (n - 1)),
    }


def brute_force_abs_sum(n: int, k: int) -> Fraction:
    """E[Z] by enumerating every xi in {-1, 0, 1}^n with its weight."""
    _check(n, k)
    weights = {-1: 1, 0: k - 1, 1: 1}
    total = 0
    for steps in itertools.product((-1, 0, 1), repeat=n):
        weight = math.prod(weights[s] for s in steps)
        total += weight * abs(sum(steps))
    return Fraction(total, (k + 1) ** n)
