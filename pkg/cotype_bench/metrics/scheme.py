"""
Empirical constants of a smoothing and approximation scheme for one function.

    A^q = [(1/n) sum_j E_x ||f * nu_j - f||^q] / energy(f, beta1)
    S^q = [E_{x, eps} ||sum_j eps_j (f * nu_j (x + e_j) - f * nu_j (x - e_j))||^q] / energy(f, beta2)

with eps uniform on {-1, 1}^n. A constant is None when its denominator is 0.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from cotype_bench.errors import DomainMismatchError
from cotype_bench.kernels.edges import EdgeMeasure, beta1, beta2, edge_energy
from cotype_bench.kernels.kernel import Kernel, convolve
from cotype_bench.kernels.operators import scheme_kernels
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.torus.functions import NormSpec, Scalar, TorusFunction, format_scalar
from cotype_bench.torus.measures import table_mean
from cotype_bench.torus.points import TorusPoint, full_signs

logger = logging.getLogger(__name__)


def _check_kernels(f: TorusFunction, kernels: Sequence[Kernel]) -> None:
    if len(kernels) != f.n:
        raise DomainMismatchError(f"need {f.n} kernels, got {len(kernels)}")
    if any((nu.m, nu.n) != (f.m, f.n) for nu in kernels):
        raise DomainMismatchError("kernels and function live on different tori")


def approximation_terms(f: TorusFunction, kernels: Sequence[Kernel], spec: NormSpec) -> List[Scalar]:
    """E_x ||f * nu_j - f||^q for each j."""
    _check_kernels(f, kernels)
    return [table_mean((convolve(f, nu) - f).norm_power_table(spec)) for nu in kernels]


def approximation_numerator(f: TorusFunction, kernels: Sequence[Kernel], spec: NormSpec):
    terms = approximation_terms(f, kernels, spec)
    return sum(terms[1:], terms[0]) / len(terms)


def smoothed_differences(f: TorusFunction, kernels: Sequence[Kernel]) -> List[TorusFunction]:
    """x -> f * nu_j (x + e_j) - f * nu_j (x - e_j) for each j."""
    _check_kernels(f, kernels)
    out = []
    for j, nu in enumerate(kernels):
        smoothed = convolve(f, nu)
        unit = TorusPoint.basis(f.n, j, f.m)
        out.append(smoothed.translate(unit) - smoothed.translate(-unit))
    return out


def smoothing_numerator(f: TorusFunction, kernels: Sequence[Kernel], spec: NormSpec):
    differences = smoothed_differences(f, kernels)
    total = None
    count = 0
    for eps in full_signs(f.n):
        combined = differences[0].scale(eps[0])
        for j in range(1, f.n):
            combined = combined + differences[j].scale(eps[j])
        term = table_mean(combined.norm_power_table(spec))
        total = term if total is None else total + term
        count += 1
    return total / count


def _ratio(numerator, denominator) -> Optional[Scalar]:
    return None if denominator == 0 else numerator / denominator


@dataclass(frozen=True)
class SchemeConstants:
    """Raw numerators and denominators of A^q and S^q."""

    approximation_numerator: Scalar
    approximation_denominator: Scalar
    smoothing_numerator: Scalar
    smoothing_denominator: Scalar

    @property
    def A_q(self) -> Optional[Scalar]:
        return _ratio(self.approximation_numerator, self.approximation_denominator)

    @property
    def S_q(self) -> Optional[Scalar]:
        return _ratio(self.smoothing_numerator, self.smoothing_denominator)

    def quantities(self) -> Dict[str, Any]:
        return {
            "approximation_numerator": format_scalar(self.approximation_numerator),
            "approximation_denominator": format_scalar(self.approximation_denominator),
            "A_q": format_scalar(self.A_q),
            "smoothing_numerator": format_scalar(self.smoothing_numerator),
            "smoothing_denominator": format_scalar(self.smoothing_denominator),
            "S_q": format_scalar(self.S_q),
        }


def scheme_constants(
    params: SchemeParams,
    f: TorusFunction,
    spec: Optional[NormSpec] = None,
    kernels: Optional[Sequence[Kernel]] = None,
    approximation_measure: Optional[EdgeMeasure] = None,
    smoothing_measure: Optional[EdgeMeasure] = None,
) -> SchemeConstants:
    """A^q and S^q of f for the S(j,k) scheme unless other kernels or measures are given."""
    if (f.m, f.n) != (params.m, params.n):
        raise DomainMismatchError("function and parameters disagree on (n, m)")
    spec = spec or NormSpec(2, params.q)
    kernels = kernels if kernels is not None else scheme_kernels(params)
    first = approximation_measure or beta1(params)
    second = smoothing_measure or beta2(params)
    constants = SchemeConstants(
        approximation_numerator=approximation_numerator(f, kernels, spec),
        approximation_denominator=edge_energy(f, first, spec),
        smoothing_numerator=smoothing_numerator(f, kernels, spec),
        smoothing_denominator=edge_energy(f, second, spec),
    )
    logger.debug("scheme constants %s: %s", params, constants.quantities())
    return constants
