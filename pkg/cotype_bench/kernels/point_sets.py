"""The parity-constrained boxes S(j,k), L_B and the all-odd box."""

import itertools
from typing import Iterable, Iterator, List, Tuple

from cotype_bench.errors import PreconditionError
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.torus.points import TorusPoint


def _check_coordinate(params: SchemeParams, j: int) -> None:
    if not 0 <= j < params.n:
        raise PreconditionError(f"coordinate {j} out of range for n={params.n}")


def check_subset(params: SchemeParams, subset: Iterable[int]) -> Tuple[int, ...]:
    subset = tuple(sorted(set(subset)))
    if any(not 0 <= t < params.n for t in subset):
        raise PreconditionError(f"{subset} is not a subset of range({params.n})")
    return subset


def s_jk_factors(params: SchemeParams, j: int) -> List[Tuple[int, ...]]:
    """Per-coordinate offsets of S(j,k): even on j, odd elsewhere."""
    _check_coordinate(params, j)
    return [params.even_offsets() if t == j else params.odd_offsets() for t in range(params.n)]


def l_b_factors(params: SchemeParams, subset: Iterable[int]) -> List[Tuple[int, ...]]:
    """Per-coordinate offsets of L_B: even inside (-k, k) on B, zero off B."""
    subset = check_subset(params, subset)
    return [params.even_offsets() if t in subset else (0,) for t in range(params.n)]


def odd_box_factors(params: SchemeParams) -> List[Tuple[int, ...]]:
    return [params.odd_offsets()] * params.n


def _points(params: SchemeParams, factors: List[Tuple[int, ...]]) -> List[TorusPoint]:
    return [TorusPoint.of(offsets, params.m) for offsets in itertools.product(*factors)]


def build_S_jk(params: SchemeParams, j: int) -> List[TorusPoint]:
    """S(j,k) = {y in [-k,k]^n : y_j even, y_t odd for t != j} (j is 0-based)."""
    return _points(params, s_jk_factors(params, j))


def build_L_B(params: SchemeParams, subset: Iterable[int]) -> List[TorusPoint]:
    """L_B: even coordinates in (-k, k) on B and zero elsewhere."""
    return _points(params, l_b_factors(params, subset))


def build_odd_box(params: SchemeParams) -> List[TorusPoint]:
    """The all-odd box {y in [-k,k]^n : every y_t odd}, of size (k+1)^n."""
    return _points(params, odd_box_factors(params))


def iter_odd_box(params: SchemeParams) -> Iterator[Tuple[int, ...]]:
    """Signed coordinates of the all-odd box, lazily."""
    return itertools.product(*odd_box_factors(params))


def in_odd_box(signed: Tuple[int, ...], k: int) -> bool:
    return all(v % 2 == 1 and abs(v) <= k for v in signed)
