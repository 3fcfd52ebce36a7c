"""Counts of coordinates equal to k and to -k."""

from dataclasses import dataclass
from typing import Sequence, Union

from cotype_bench.kernels.params import SchemeParams
from cotype_bench.torus.points import SignVector, TorusPoint, odot


@dataclass(frozen=True)
class KCounts:
    """pk = #{t : y_t = k mod m}, mk = #{t : y_t = -k mod m}."""

    pk: int
    mk: int

    @property
    def pmk(self) -> int:
        return self.pk + self.mk

    @property
    def pMmk(self) -> int:
        return self.pk - self.mk


def k_counts(y: Union[TorusPoint, Sequence[int]], params: SchemeParams) -> KCounts:
    values = y.coords if isinstance(y, TorusPoint) else y
    plus, minus = params.k % params.m, -params.k % params.m
    residues = [v % params.m for v in values]
    return KCounts(pk=residues.count(plus), mk=residues.count(minus))


def k_counts_signed(y: Union[TorusPoint, Sequence[int]], eps: SignVector, params: SchemeParams) -> KCounts:
    """KCounts of y ⊙ eps."""
    return k_counts(odot(y, eps), params)
