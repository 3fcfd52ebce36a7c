"""Rademacher cotype and type ratios by full enumeration of the sign cube."""

import itertools
import logging
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np

from cotype_bench.errors import BudgetExceededError, DomainMismatchError, ExactModeError, PreconditionError
from cotype_bench.torus.functions import NormSpec, Scalar, ScalarMode, norm_power_array
from cotype_bench.torus.measures import table_mean, table_total

logger = logging.getLogger(__name__)

MAX_VECTORS = 24


def _matrix(vectors: Sequence[Sequence[Scalar]], mode: ScalarMode) -> np.ndarray:
    if not vectors:
        raise PreconditionError("need at least one vector")
    d = len(vectors[0])
    if any(len(v) != d for v in vectors):
        raise DomainMismatchError("vectors have different lengths")
    if len(vectors) > MAX_VECTORS:
        raise BudgetExceededError(f"2^{len(vectors)} sign patterns exceed the enumeration budget of 2^{MAX_VECTORS}")
    if mode is ScalarMode.EXACT:
        if any(not isinstance(c, Rational) for v in vectors for c in v):
            raise ExactModeError("exact mode needs rational vectors")
        return np.array([[Fraction(c) for c in v] for v in vectors], dtype=object)
    return np.array(vectors, dtype=float)


def _sign_matrix(n: int, mode: ScalarMode) -> np.ndarray:
    signs = np.array(list(itertools.product((-1, 1), repeat=n)), dtype=np.int64)
    return signs.astype(object) if mode is ScalarMode.EXACT else signs.astype(float)


def rademacher_average(vectors: Sequence[Sequence[Scalar]], spec: NormSpec, mode: ScalarMode = ScalarMode.EXACT):
    """E_eps ||sum_j eps_j x_j||^q over all 2^n sign patterns."""
    matrix = _matrix(vectors, mode)
    sums = _sign_matrix(len(vectors), mode).dot(matrix)
    return table_mean(norm_power_array(sums, spec, mode))


def _norm_total(vectors: Sequence[Sequence[Scalar]], spec: NormSpec, mode: ScalarMode):
    return table_total(norm_power_array(_matrix(vectors, mode), spec, mode))


def rademacher_cotype_ratio(
    vectors: Sequence[Sequence[Scalar]], spec: NormSpec, mode: ScalarMode = ScalarMode.EXACT
):
    """sum_j ||x_j||^q / E_eps ||sum_j eps_j x_j||^q."""
    numerator = _norm_total(vectors, spec, mode)
    denominator = rademacher_average(vectors, spec, mode)
    if denominator == 0:
        raise PreconditionError("all vectors are zero; the cotype ratio is 0/0")
    return numerator / denominator


def rademacher_type_ratio(
    vectors: Sequence[Sequence[Scalar]],
    p_type: Scalar,
    spec: NormSpec,
    mode: ScalarMode = ScalarMode.EXACT,
):
    """E_eps ||sum_j eps_j x_j||^p / sum_j ||x_j||^p, with the codomain norm of spec."""
    type_spec = NormSpec(spec.p, p_type)
    denominator = _norm_total(vectors, type_spec, mode)
    if denominator == 0:
        raise PreconditionError("all vectors are zero; the type ratio is 0/0")
    return rademacher_average(vectors, type_spec, mode) / denominator
