"""
The signed indicator sums b_{i,j}(z, eps) and a(z, eps).

For S a subset of [n] with |S| = i and T its complement,

    b_{i,j}(z, eps) = sum_{S, delta} 1[z in delta k + eps_T + L_T] - 1[z in delta k - eps_T + L_T]

where delta ranges over {-1,1}^S with <delta, eps_S> = i - 2j, and

    a(z, eps) = sum_j eps_j (1[z in e_j + S(j,k)] - 1[z in -e_j + S(j,k)]).

The *_bruteforce functions evaluate single points literally; the *_table
functions build the whole table over Z_m^n from one-dimensional masks.
"""

import functools
import itertools
from functools import lru_cache
from math import comb
from typing import FrozenSet, Iterator, Sequence, Tuple

import numpy as np

from cotype_bench.errors import DomainMismatchError, PreconditionError
from cotype_bench.identities.counting import k_counts, k_counts_signed
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.kernels.point_sets import build_S_jk, in_odd_box
from cotype_bench.torus.points import SignVector, TorusPoint, signed_rep

Term = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _check(z: TorusPoint, eps: SignVector, params: SchemeParams) -> None:
    if z.m != params.m or z.n != params.n or eps.n != params.n:
        raise DomainMismatchError("point, signs and parameters disagree on (n, m)")


def _check_indices(i: int, j: int, n: int) -> None:
    if not 0 <= j <= i <= n:
        raise PreconditionError(f"need 0 <= j <= i <= n, got i={i}, j={j}, n={n}")


def admissible_terms(eps: SignVector, i: int, j: int) -> Iterator[Term]:
    """All (S, delta) with |S| = i, delta in {-1,1}^S and <delta, eps_S> = i - 2j."""
    for subset in itertools.combinations(range(eps.n), i):
        for delta in itertools.product((-1, 1), repeat=i):
            if sum(d * eps[s] for d, s in zip(delta, subset)) == i - 2 * j:
                yield subset, delta


def _even_interior(value: int, params: SchemeParams) -> bool:
    rep = signed_rep(value, params.m)
    return rep % 2 == 0 and abs(rep) < params.k


def _in_shifted_box(z: TorusPoint, subset, delta, eps: SignVector, sign: int, params: SchemeParams) -> bool:
    """z in delta k + sign eps_T + L_T."""
    fixed = dict(zip(subset, delta))
    for t in range(params.n):
        if t in fixed:
            if (z[t] - fixed[t] * params.k) % params.m:
                return False
        elif not _even_interior(z[t] - sign * eps[t], params):
            return False
    return True


def b_bruteforce(z: TorusPoint, eps: SignVector, i: int, j: int, params: SchemeParams) -> int:
    """b_{i,j}(z, eps) by enumerating every admissible (S, delta)."""
    _check(z, eps, params)
    _check_indices(i, j, params.n)
    total = 0
    for subset, delta in admissible_terms(eps, i, j):
        total += _in_shifted_box(z, subset, delta, eps, 1, params)
        total -= _in_shifted_box(z, subset, delta, eps, -1, params)
    return total


def count_admissible_terms(eps: SignVector, i: int, j: int) -> int:
    return sum(1 for _ in admissible_terms(eps, i, j))


@lru_cache(maxsize=64)
def _s_jk_members(params: SchemeParams, j: int) -> FrozenSet[Tuple[int, ...]]:
    return frozenset(p.coords for p in build_S_jk(params, j))


def a_bruteforce(z: TorusPoint, eps: SignVector, params: SchemeParams) -> int:
    """a(z, eps) by membership tests in the translated sets +-e_j + S(j,k)."""
    _check(z, eps, params)
    total = 0
    for j in range(params.n):
        members = _s_jk_members(params, j)
        forward = z - TorusPoint.basis(params.n, j, params.m)
        backward = z + TorusPoint.basis(params.n, j, params.m)
        total += eps[j] * ((forward.coords in members) - (backward.coords in members))
    return total


def in_odd_box_point(z: TorusPoint, params: SchemeParams) -> bool:
    return in_odd_box(z.signed(), params.k)


def b_closed_form(z: TorusPoint, eps: SignVector, i: int, j: int, params: SchemeParams) -> int:
    """Closed form of b_{i,j} on the all-odd box for i < pmk(z).

    C(pmk - j, i - j) if mk(z ⊙ eps) = j, -C(pmk - (i - j), j) if pk(z ⊙ eps) = i - j,
    and 0 otherwise.
    """
    _check(z, eps, params)
    _check_indices(i, j, params.n)
    if not in_odd_box_point(z, params):
        raise PreconditionError(f"{z.signed()} is not in the all-odd box")
    pmk = k_counts(z, params).pmk
    if i >= pmk:
        raise PreconditionError(f"closed form needs i < pmk(z) = {pmk}, got i={i}; b vanishes there")
    counts = k_counts_signed(z, eps, params)
    if counts.mk == j:
        return comb(pmk - j, i - j)
    if counts.pk == i - j:
        return -comb(pmk - (i - j), j)
    return 0


# table forms


def _signed_array(values: np.ndarray, m: int) -> np.ndarray:
    half = m // 2
    return (values + half) % m - half


def _outer(masks: Sequence[np.ndarray]) -> np.ndarray:
    return functools.reduce(np.multiply, np.ix_(*masks))


def _even_interior_mask(shift: int, params: SchemeParams) -> np.ndarray:
    rep = _signed_array(np.arange(params.m) - shift, params.m)
    return ((rep % 2 == 0) & (np.abs(rep) < params.k)).astype(np.int64)


def _box_mask(shift: int, even: bool, params: SchemeParams) -> np.ndarray:
    rep = _signed_array(np.arange(params.m) - shift, params.m)
    parity = 0 if even else 1
    return ((rep % 2 == parity) & (np.abs(rep) <= params.k)).astype(np.int64)


def b_table(eps: SignVector, i: int, j: int, params: SchemeParams) -> np.ndarray:
    """b_{i,j}(., eps) over all of Z_m^n."""
    _check_indices(i, j, params.n)
    residues = np.arange(params.m)
    table = np.zeros((params.m,) * params.n, dtype=np.int64)
    for subset, delta in admissible_terms(eps, i, j):
        fixed = dict(zip(subset, delta))
        for sign in (1, -1):
            masks = [
                (
                    (residues == (fixed[t] * params.k) % params.m).astype(np.int64)
                    if t in fixed
                    else _even_interior_mask(sign * eps[t], params)
                )
                for t in range(params.n)
            ]
            table += sign * _outer(masks)
    return table


def a_table(eps: SignVector, params: SchemeParams) -> np.ndarray:
    """a(., eps) over all of Z_m^n."""
    table = np.zeros((params.m,) * params.n, dtype=np.int64)
    for j in range(params.n):
        for direction in (1, -1):
            masks = [_box_mask(direction if t == j else 0, t == j, params) for t in range(params.n)]
            table += eps[j] * direction * _outer(masks)
    return table
