"""
The truncated jigsaw g_s and the componentwise witness f_s(x) = (g_s(x_1), ..., g_s(x_n)).

g_s(t) = clamp(|r| - s, 0, s) where r is the representative of t mod 12s in [-6s, 6s).
"""

import logging
import math
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence

import numpy as np

from cotype_bench.errors import PreconditionError
from cotype_bench.kernels.edges import beta1, edge_energy
from cotype_bench.kernels.operators import scheme_kernels
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.metrics.scheme import approximation_numerator
from cotype_bench.torus.functions import NormSpec, ScalarMode, TorusFunction

logger = logging.getLogger(__name__)


def jigsaw(t: int, s: int) -> int:
    if s < 1:
        raise PreconditionError(f"s must be positive, got {s}")
    period = 12 * s
    r = (t + 6 * s) % period - 6 * s
    return min(max(abs(r) - s, 0), s)


def jigsaw_is_periodic(m: int, s: int) -> bool:
    """True when 12s divides m, so g_s is well defined on Z_m."""
    return m % (12 * s) == 0


def jigsaw_vector_fn(s: int, m: int, n: int, mode: ScalarMode = ScalarMode.EXACT) -> TorusFunction:
    """f_s into l_infinity^n, evaluated on residues in [0, m)."""
    if not jigsaw_is_periodic(m, s):
        logger.info("12s=%d does not divide m=%d; f_s is evaluated on residues without wrapping", 12 * s, m)
    profile = np.array([jigsaw(t, s) for t in range(m)], dtype=np.int64)
    grids = np.meshgrid(*([profile] * n), indexing="ij")
    table = np.stack(grids, axis=-1)
    return TorusFunction(m, n, table if mode is ScalarMode.EXACT else table.astype(float), mode)


def lipschitz_violations(s: int, ts: Iterable[int]) -> int:
    """Number of t with |g_s(t+1) - g_s(t)| > 1."""
    return sum(1 for t in ts if abs(jigsaw(t + 1, s) - jigsaw(t, s)) > 1)


def approximation_constant(f: TorusFunction, params: SchemeParams, spec: NormSpec) -> Optional[Fraction]:
    """A^q(f) = [(1/n) sum_j E||E_j f - f||^q] / energy(f, beta1) for the S(j,k) scheme."""
    denominator = edge_energy(f, beta1(params), spec)
    if denominator == 0:
        return None
    return approximation_numerator(f, scheme_kernels(params), spec) / denominator


def approximation_growth(
    k_values: Sequence[int] = (3, 5, 7, 9),
    s_values: Sequence[int] = (1, 2, 4),
    m: int = 48,
    n: int = 1,
    q: int = 1,
) -> Dict[int, Dict[int, Fraction]]:
    """A^q of every jigsaw witness f_s for every k, keyed as growth[k][s]."""
    spec = NormSpec(math.inf, q)
    growth: Dict[int, Dict[int, Fraction]] = {}
    for k in k_values:
        params = SchemeParams(n=n, m=m, k=k, q=q)
        growth[k] = {s: approximation_constant(jigsaw_vector_fn(s, m, n), params, spec) for s in s_values}
        logger.info("approximation growth k=%d: %s", k, {s: str(a) for s, a in growth[k].items()})
    return growth
