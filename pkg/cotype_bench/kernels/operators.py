"""The averaging operators E_j = f * nu_j and Delta_B of the S(j,k) scheme."""

from functools import lru_cache
from typing import Iterable, Tuple

from cotype_bench.kernels.kernel import Kernel, convolve
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.kernels.point_sets import check_subset, l_b_factors, s_jk_factors
from cotype_bench.torus.functions import TorusFunction


@lru_cache(maxsize=256)
def s_jk_kernel(params: SchemeParams, j: int) -> Kernel:
    """nu_j: the uniform probability measure on S(j,k)."""
    return Kernel.uniform_product(params.m, s_jk_factors(params, j))


@lru_cache(maxsize=256)
def l_b_kernel(params: SchemeParams, subset: Tuple[int, ...]) -> Kernel:
    """The uniform probability measure on L_B."""
    return Kernel.uniform_product(params.m, l_b_factors(params, subset))


def scheme_kernels(params: SchemeParams) -> Tuple[Kernel, ...]:
    """nu_1, ..., nu_n of the S(j,k) scheme."""
    return tuple(s_jk_kernel(params, j) for j in range(params.n))


def E_j(f: TorusFunction, params: SchemeParams, j: int) -> TorusFunction:
    """E_j f(x): average of f over x + S(j,k)."""
    return convolve(f, s_jk_kernel(params, j))


def Delta_B(f: TorusFunction, params: SchemeParams, subset: Iterable[int]) -> TorusFunction:
    """Delta_B f(x): average of f over x + L_B."""
    return convolve(f, l_b_kernel(params, check_subset(params, subset)))
