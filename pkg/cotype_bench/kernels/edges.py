"""
Probability measures on the l_infinity edges of Z_m^n.

E_inf is the set of ordered pairs (x, y) with y - x in {-1, 0, 1}^n. Every
measure used by the scheme is translation invariant, so an EdgeMeasure is a
closed-form weight of the offset delta = y - x; the weight of a pair is that
offset weight, and the total mass is m^n times the sum over the 3^n offsets.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Sequence, Tuple, Union

from cotype_bench.errors import DomainMismatchError, ExactModeError, PreconditionError
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.torus.functions import NormSpec, ScalarMode, TorusFunction
from cotype_bench.torus.measures import table_total
from cotype_bench.torus.points import TorusPoint, permute_coords, signed_rep

logger = logging.getLogger(__name__)

Offset = Tuple[int, ...]


def edge_offsets(n: int) -> Iterator[Offset]:
    """The 3^n offsets of {-1, 0, 1}^n in lexicographic order."""
    return itertools.product((-1, 0, 1), repeat=n)


@dataclass(frozen=True)
class EdgeMeasure:
    """
    A translation invariant measure on ordered E_inf pairs.

    Attributes:
        m: Modulus
        n: Dimension
        name: Label used in reports
        offset_weight: Exact weight of a single pair (x, x + delta)
        normalizer: The normalizing constant (Z or the uniform count)
    """

    m: int
    n: int
    name: str
    offset_weight: Callable[[Offset], Fraction]
    normalizer: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.m < 3:
            raise PreconditionError("l_infinity edges need m >= 3 so that offsets are distinct")

    def weight(self, x: TorusPoint, y: TorusPoint) -> Fraction:
        """Weight of the ordered pair (x, y); zero outside E_inf."""
        if (x.m, x.n) != (self.m, self.n) or (y.m, y.n) != (self.m, self.n):
            raise DomainMismatchError("points do not live on the measure's torus")
        delta = tuple(signed_rep(b - a, self.m) for a, b in zip(x.coords, y.coords))
        if any(abs(d) > 1 for d in delta):
            return Fraction(0)
        return self.offset_weight(delta)

    def total_mass(self) -> Fraction:
        return self.m**self.n * sum((self.offset_weight(d) for d in edge_offsets(self.n)), Fraction(0))

    def is_symmetric(self) -> bool:
        return all(
            self.offset_weight(d) == self.offset_weight(tuple(-c for c in d)) for d in edge_offsets(self.n)
        )

    def mixture(self, other: "EdgeMeasure", weight: Fraction = Fraction(1, 2)) -> "EdgeMeasure":
        """weight * self + (1 - weight) * other."""
        if (self.m, self.n) != (other.m, other.n):
            raise DomainMismatchError("cannot mix edge measures on different tori")
        first, second = self.offset_weight, other.offset_weight

        def offset_weight(delta: Offset) -> Fraction:
            return weight * first(delta) + (1 - weight) * second(delta)

        return EdgeMeasure(self.m, self.n, f"mix({self.name},{other.name})", offset_weight)

    def permute(self, pi: Sequence[int]) -> "EdgeMeasure":
        """beta^pi(x, y) = beta(x^pi, y^pi)."""
        base = self.offset_weight

        def offset_weight(delta: Offset) -> Fraction:
            return base(permute_coords(delta, pi))

        return EdgeMeasure(self.m, self.n, f"{self.name}^pi", offset_weight, self.normalizer)


def beta1(params: SchemeParams) -> EdgeMeasure:
    """Half uniform on {x - y in {-1,1}^n}, half uniform on the l_1 edges."""
    n, m = params.n, params.m
    diagonal = Fraction(1, 2 * m**n * 2**n)
    axis = Fraction(1, 2 * m**n * 2 * n)

    def offset_weight(delta: Offset) -> Fraction:
        moved = sum(1 for c in delta if c != 0)
        weight = Fraction(0)
        if moved == n:
            weight += diagonal
        if moved == 1:
            weight += axis
        return weight

    return EdgeMeasure(m, n, "beta1", offset_weight, Fraction(m**n * (2**n + 2 * n)))


def beta2_normalizer(n: int, k: int, q: Union[int, Fraction]) -> Fraction:
    """Z = sum_{l=0}^n (n/k)^(q l)."""
    if int(q) != q:
        raise ExactModeError(f"(n/k)^(q l) is not rational for q={q}")
    ratio = Fraction(n, k) ** int(q)
    return sum((ratio**level for level in range(n + 1)), Fraction(0))


def beta2(params: SchemeParams) -> EdgeMeasure:
    """beta2(x, y) = (n/k)^(q|S|) / (Z 2^(n-|S|) m^n C(n,|S|)) with S = {i : x_i = y_i}."""
    n, m, k = params.n, params.m, params.k
    normalizer = beta2_normalizer(n, k, params.q)
    ratio = Fraction(n, k) ** int(params.q)
    by_level = [ratio**level / (normalizer * 2 ** (n - level) * m**n * comb(n, level)) for level in range(n + 1)]

    def offset_weight(delta: Offset) -> Fraction:
        return by_level[sum(1 for c in delta if c == 0)]

    return EdgeMeasure(m, n, "beta2", offset_weight, normalizer)


def beta3(params: SchemeParams) -> EdgeMeasure:
    """(beta1 + beta2) / 2."""
    return beta1(params).mixture(beta2(params))


def edge_energy(f: TorusFunction, beta: EdgeMeasure, spec: NormSpec):
    """sum over ordered E_inf pairs of beta(x, y) ||f(x) - f(y)||^q."""
    if (f.m, f.n) != (beta.m, beta.n):
        raise DomainMismatchError(f"function on Z_{f.m}^{f.n}, measure on Z_{beta.m}^{beta.n}")
    exact = f.mode is ScalarMode.EXACT
    total = Fraction(0) if exact else 0.0
    for delta in edge_offsets(f.n):
        weight = beta.offset_weight(delta)
        if weight == 0 or not any(delta):
            continue
        increments = (f.translate(delta) - f).norm_power_table(spec)
        total += (weight if exact else float(weight)) * table_total(increments)
    return total
