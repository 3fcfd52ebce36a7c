"""Uniform averages over the torus (mu), full signs (tau) and mixed signs (sigma)."""

from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterator, Optional

import numpy as np

from cotype_bench.errors import PreconditionError
from cotype_bench.torus.points import full_signs, mixed_signs, torus_points


class Domain(Enum):
    TORUS = "mu"
    FULL_SIGNS = "tau"
    MIXED_SIGNS = "sigma"


def domain_points(domain: Domain, n: int, m: Optional[int] = None) -> Iterator[Any]:
    if domain is Domain.TORUS:
        if m is None:
            raise PreconditionError("the torus average needs a modulus")
        return torus_points(m, n)
    if domain is Domain.FULL_SIGNS:
        return full_signs(n)
    return mixed_signs(n)


def domain_size(domain: Domain, n: int, m: Optional[int] = None) -> int:
    if domain is Domain.TORUS:
        return m**n
    return 2**n if domain is Domain.FULL_SIGNS else 3**n


def mean_over(domain: Domain, g: Callable[[Any], Any], n: int, m: Optional[int] = None):
    """Exact average of g over the chosen finite domain.

    The sum runs left to right in enumeration order, so float inputs give a
    reproducible result; rational inputs give an exact Fraction.
    """
    total = Fraction(0)
    for point in domain_points(domain, n, m):
        total = total + g(point)
    return total / domain_size(domain, n, m)


def table_mean(table: np.ndarray):
    """Average of all entries of a table over Z_m^n."""
    if table.dtype == object:
        return Fraction(sum(table.flat, Fraction(0))) / table.size
    return float(table.sum()) / table.size


def table_total(table: np.ndarray):
    if table.dtype == object:
        return Fraction(sum(table.flat, Fraction(0)))
    return float(table.sum())
