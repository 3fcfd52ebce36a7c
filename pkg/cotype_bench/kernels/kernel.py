"""
Probability kernels on Z_m^n and convolution with them.

A kernel is a sparse map point -> positive rational weight summing to 1.
Product kernels additionally keep their per-coordinate factors, which lets
convolution run as n successive one-dimensional averages.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from cotype_bench.errors import DomainMismatchError, PreconditionError
from cotype_bench.torus.functions import ScalarMode, TorusFunction, format_scalar
from cotype_bench.torus.points import (
    TorusPoint,
    check_permutation,
    inverse_permutation,
    permute_coords,
)

logger = logging.getLogger(__name__)

Coords = Tuple[int, ...]
Factor = Mapping[int, Fraction]


class KernelSupportEntry(BaseModel):
    point: List[int]
    weight: str


class KernelDocument(BaseModel):
    """JSON form of a Kernel, mirroring the TorusFunction document."""

    m: int
    n: int
    support: List[KernelSupportEntry] = Field(default_factory=list)
    factors: Optional[List[Dict[str, str]]] = Field(default=None, description="Per-coordinate residue -> weight")


def _validate_weights(weights: Mapping, what: str) -> None:
    if not weights:
        raise PreconditionError(f"{what} has empty support")
    if any(w <= 0 for w in weights.values()):
        raise PreconditionError(f"{what} has non-positive weights")
    total = sum(weights.values(), Fraction(0))
    if total != 1:
        raise PreconditionError(f"{what} has total mass {total}, expected 1")


@dataclass(frozen=True, eq=False)
class Kernel:
    """
    A probability measure on Z_m^n.

    Attributes:
        m: Modulus
        n: Dimension
        weights: Residue tuple -> exact positive weight
        factors: Per-coordinate factor measures when the kernel is a product
    """

    m: int
    n: int
    weights: Mapping[Coords, Fraction]
    factors: Optional[Tuple[Factor, ...]] = None

    def __post_init__(self) -> None:
        for coords in self.weights:
            if len(coords) != self.n or any(not 0 <= c < self.m for c in coords):
                raise PreconditionError(f"support point {coords} is not a point of Z_{self.m}^{self.n}")
        _validate_weights(self.weights, "kernel")
        object.__setattr__(self, "weights", MappingProxyType(dict(sorted(self.weights.items()))))
        if self.factors is not None:
            if len(self.factors) != self.n:
                raise PreconditionError("a product kernel needs one factor per coordinate")
            frozen = tuple(MappingProxyType(dict(sorted(f.items()))) for f in self.factors)
            object.__setattr__(self, "factors", frozen)

    # construction

    @classmethod
    def from_weights(cls, m: int, n: int, weights: Mapping[Coords, Union[Fraction, int]]) -> "Kernel":
        return cls(m, n, {tuple(int(c) % m for c in p): Fraction(w) for p, w in weights.items()})

    @classmethod
    def uniform(cls, m: int, n: int, points: Iterable[Union[TorusPoint, Sequence[int]]]) -> "Kernel":
        """Uniform measure on a finite set of distinct points."""
        coords = [tuple(p.coords) if isinstance(p, TorusPoint) else tuple(int(c) % m for c in p) for p in points]
        if len(set(coords)) != len(coords):
            raise PreconditionError("uniform kernel support points must be distinct")
        weight = Fraction(1, len(coords))
        return cls(m, n, {c: weight for c in coords})

    @classmethod
    def point_mass(cls, x: TorusPoint) -> "Kernel":
        factors = tuple({c: Fraction(1)} for c in x.coords)
        return cls(x.m, x.n, {x.coords: Fraction(1)}, factors)

    @classmethod
    def product(cls, m: int, factors: Sequence[Mapping[int, Union[Fraction, int]]]) -> "Kernel":
        """Product of one-dimensional probability measures on Z_m."""
        reduced: List[Dict[int, Fraction]] = []
        for idx, factor in enumerate(factors):
            table: Dict[int, Fraction] = {}
            for residue, weight in factor.items():
                key = int(residue) % m
                if key in table:
                    raise PreconditionError(f"factor {idx} repeats residue {key}")
                table[key] = Fraction(weight)
            _validate_weights(table, f"factor {idx}")
            reduced.append(table)
        weights = {}
        for combo in itertools.product(*(sorted(f.items()) for f in reduced)):
            weight = Fraction(1)
            for _, w in combo:
                weight *= w
            weights[tuple(r for r, _ in combo)] = weight
        return cls(m, len(reduced), weights, tuple(reduced))

    @classmethod
    def uniform_product(cls, m: int, offsets: Sequence[Sequence[int]]) -> "Kernel":
        """Product of uniform measures on the given integer offsets per coordinate."""
        return cls.product(m, [{o: Fraction(1, len(opts)) for o in opts} for opts in offsets])

    # queries

    @property
    def is_product(self) -> bool:
        return self.factors is not None

    def weight(self, x: Union[TorusPoint, Sequence[int]]) -> Fraction:
        coords = x.coords if isinstance(x, TorusPoint) else tuple(int(c) % self.m for c in x)
        return self.weights.get(coords, Fraction(0))

    def points(self) -> List[TorusPoint]:
        return [TorusPoint(c, self.m) for c in self.weights]

    def __len__(self) -> int:
        return len(self.weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Kernel):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and dict(self.weights) == dict(other.weights)

    def __hash__(self) -> int:
        return hash((self.m, self.n, tuple(self.weights.items())))

    def permute(self, pi: Sequence[int]) -> "Kernel":
        """nu^pi(x) = nu(x^pi); the support is relabeled by pi^(-1)."""
        pi = check_permutation(pi, self.n)
        inv = inverse_permutation(pi)
        weights = {permute_coords(c, inv): w for c, w in self.weights.items()}
        factors = None
        if self.factors is not None:
            factors = tuple(self.factors[inv[s]] for s in range(self.n))
        return Kernel(self.m, self.n, weights, factors)

    # serialization

    def to_document(self) -> KernelDocument:
        return KernelDocument(
            m=self.m,
            n=self.n,
            support=[KernelSupportEntry(point=list(c), weight=format_scalar(w)) for c, w in self.weights.items()],
            factors=(
                None
                if self.factors is None
                else [{str(r): format_scalar(w) for r, w in f.items()} for f in self.factors]
            ),
        )

    @classmethod
    def from_document(cls, doc: KernelDocument) -> "Kernel":
        if doc.factors is not None:
            return cls.product(doc.m, [{int(r): Fraction(w) for r, w in f.items()} for f in doc.factors])
        return cls(doc.m, doc.n, {tuple(e.point): Fraction(e.weight) for e in doc.support})


def average_kernels(kernels: Sequence[Kernel]) -> Kernel:
    """Uniform mixture of kernels on the same torus."""
    first = kernels[0]
    total: Dict[Coords, Fraction] = {}
    for kernel in kernels:
        if (kernel.m, kernel.n) != (first.m, first.n):
            raise DomainMismatchError("cannot mix kernels on different tori")
        for coords, weight in kernel.weights.items():
            total[coords] = total.get(coords, Fraction(0)) + weight
    return Kernel(first.m, first.n, {c: w / len(kernels) for c, w in total.items()})


def _weight(weight: Fraction, mode: ScalarMode):
    return weight if mode is ScalarMode.EXACT else float(weight)


def _convolve_naive(f: TorusFunction, nu: Kernel) -> np.ndarray:
    out = None
    for coords, weight in nu.weights.items():
        term = np.roll(f.values, shift=coords, axis=f.axes) * _weight(weight, f.mode)
        out = term if out is None else out + term
    return out


def _convolve_separable(f: TorusFunction, nu: Kernel) -> np.ndarray:
    values = f.values
    for axis, factor in enumerate(nu.factors):
        out = None
        for residue, weight in factor.items():
            term = np.roll(values, shift=residue, axis=axis) * _weight(weight, f.mode)
            out = term if out is None else out + term
        values = out
    return values


def convolve(f: TorusFunction, nu: Kernel, method: str = "auto") -> TorusFunction:
    """(f * nu)(x) = sum_y nu(y) f(x - y).

    method is "auto" (separable whenever the kernel carries factors), "naive"
    or "separable".
    """
    if (f.m, f.n) != (nu.m, nu.n):
        raise DomainMismatchError(f"function on Z_{f.m}^{f.n} and kernel on Z_{nu.m}^{nu.n}")
    if method not in ("auto", "naive", "separable"):
        raise PreconditionError(f"unknown convolution method {method!r}")
    if method == "separable" and not nu.is_product:
        raise PreconditionError("separable convolution needs a product kernel")
    if method == "naive" or not nu.is_product:
        values = _convolve_naive(f, nu)
    else:
        values = _convolve_separable(f, nu)
    return TorusFunction(f.m, f.n, values, f.mode)
