"""
Points of the discrete torus Z_m^n, sign vectors and coordinate permutations.

Residues are stored canonically in {0, ..., m-1}. Whenever an interval such
as [-k, k] is involved, residues are first mapped to their signed
representative in [-floor(m/2), ceil(m/2) - 1].
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence, Tuple, Union

from cotype_bench.errors import DomainMismatchError, PreconditionError

Permutation = Tuple[int, ...]


def signed_rep(z: int, m: int) -> int:
    """Signed representative of z mod m in [-floor(m/2), ceil(m/2) - 1]."""
    half = m // 2
    return (z + half) % m - half


def torus_abs(z: int, m: int) -> int:
    """|z| = min(z, m - z) for a residue 0 <= z < m."""
    if not 0 <= z < m:
        raise PreconditionError(f"residue {z} is not reduced mod {m}")
    return min(z, m - z)


class SignAlphabet(Enum):
    """Alphabet of a sign vector."""

    FULL = "full"  # {-1, 1}, the measure tau
    MIXED = "mixed"  # {-1, 0, 1}, the measure sigma


_ALLOWED = {
    SignAlphabet.FULL: frozenset((-1, 1)),
    SignAlphabet.MIXED: frozenset((-1, 0, 1)),
}


@dataclass(frozen=True)
class SignVector:
    """A vector with entries in {-1, 1} or {-1, 0, 1}."""

    signs: Tuple[int, ...]
    alphabet: SignAlphabet = SignAlphabet.FULL

    def __post_init__(self) -> None:
        if not self.signs:
            raise PreconditionError("sign vectors need n >= 1")
        allowed = _ALLOWED[self.alphabet]
        if any(s not in allowed for s in self.signs):
            raise PreconditionError(f"{self.signs} has entries outside the {self.alphabet.value} alphabet")

    @property
    def n(self) -> int:
        return len(self.signs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.signs)

    def __getitem__(self, idx: int) -> int:
        return self.signs[idx]

    def __neg__(self) -> "SignVector":
        return SignVector(tuple(-s for s in self.signs), self.alphabet)


def full_signs(n: int) -> Iterator[SignVector]:
    """All 2^n vectors of {-1, 1}^n in lexicographic order."""
    for signs in itertools.product((-1, 1), repeat=n):
        yield SignVector(signs, SignAlphabet.FULL)


def mixed_signs(n: int) -> Iterator[SignVector]:
    """All 3^n vectors of {-1, 0, 1}^n in lexicographic order."""
    for signs in itertools.product((-1, 0, 1), repeat=n):
        yield SignVector(signs, SignAlphabet.MIXED)


@dataclass(frozen=True)
class TorusPoint:
    """A point of Z_m^n."""

    coords: Tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise PreconditionError(f"modulus must be at least 2, got {self.m}")
        if not self.coords:
            raise PreconditionError("torus points need n >= 1")
        if any(not 0 <= c < self.m for c in self.coords):
            raise PreconditionError(f"coordinates {self.coords} are not reduced mod {self.m}")

    @classmethod
    def of(cls, coords: Sequence[int], m: int) -> "TorusPoint":
        """Reduce arbitrary integer coordinates mod m."""
        return cls(tuple(int(c) % m for c in coords), m)

    @classmethod
    def zero(cls, n: int, m: int) -> "TorusPoint":
        return cls((0,) * n, m)

    @classmethod
    def basis(cls, n: int, j: int, m: int, scale: int = 1) -> "TorusPoint":
        """The scaled basis vector scale * e_j (j is 0-based)."""
        if not 0 <= j < n:
            raise PreconditionError(f"coordinate {j} out of range for n={n}")
        coords = [0] * n
        coords[j] = scale
        return cls.of(coords, m)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, idx: int) -> int:
        return self.coords[idx]

    def signed(self) -> Tuple[int, ...]:
        """Signed representatives of all coordinates."""
        return tuple(signed_rep(c, self.m) for c in self.coords)

    def __add__(self, other: "Addend") -> "TorusPoint":
        return add_points(self, other)

    def __neg__(self) -> "TorusPoint":
        return TorusPoint.of([-c for c in self.coords], self.m)

    def __sub__(self, other: "TorusPoint") -> "TorusPoint":
        return add_points(self, -other)


Addend = Union[TorusPoint, SignVector, Sequence[int]]


def torus_points(m: int, n: int) -> Iterator[TorusPoint]:
    """All m^n points in row-major order."""
    for coords in itertools.product(range(m), repeat=n):
        yield TorusPoint(coords, m)


def add_points(x: TorusPoint, y: Addend) -> TorusPoint:
    """Coordinatewise sum mod m.

    y may be another point on the same torus, a sign vector, or a plain integer
    vector such as a scaled basis vector.
    """
    if isinstance(y, TorusPoint):
        if y.m != x.m:
            raise DomainMismatchError(f"modulus mismatch: {x.m} vs {y.m}")
        offsets: Sequence[int] = y.coords
    elif isinstance(y, SignVector):
        offsets = y.signs
    else:
        offsets = tuple(y)
    if len(offsets) != x.n:
        raise DomainMismatchError(f"dimension mismatch: {x.n} vs {len(offsets)}")
    return TorusPoint(tuple((a + b) % x.m for a, b in zip(x.coords, offsets)), x.m)


def check_permutation(pi: Sequence[int], n: int) -> Permutation:
    """Validate a 0-based permutation of range(n)."""
    pi = tuple(pi)
    if len(pi) != n or sorted(pi) != list(range(n)):
        raise PreconditionError(f"{pi} is not a permutation of range({n})")
    return pi


def inverse_permutation(pi: Sequence[int]) -> Permutation:
    inv = [0] * len(pi)
    for i, image in enumerate(pi):
        inv[image] = i
    return tuple(inv)


def compose(pi: Sequence[int], sigma: Sequence[int]) -> Permutation:
    """(pi o sigma)(i) = pi(sigma(i)); (x^pi)^sigma = x^(pi o sigma)."""
    return tuple(pi[s] for s in sigma)


def transposition(j: int, h: int, n: int) -> Permutation:
    pi = list(range(n))
    pi[j], pi[h] = pi[h], pi[j]
    return tuple(pi)


def permute_coords(coords: Sequence[int], pi: Sequence[int]) -> Tuple[int, ...]:
    """x^pi = (x_pi(1), ..., x_pi(n)) on plain tuples."""
    return tuple(coords[p] for p in pi)


def permute(x: TorusPoint, pi: Sequence[int]) -> TorusPoint:
    """Relabel coordinates: x^pi = (x_pi(1), ..., x_pi(n))."""
    pi = check_permutation(pi, x.n)
    return TorusPoint(permute_coords(x.coords, pi), x.m)


def odot(x: Union[TorusPoint, Sequence[int]], eps: SignVector) -> Tuple[int, ...]:
    """Coordinatewise product x ⊙ eps.

    Torus points contribute their signed representatives, so the result is an
    integer vector with entries in [-m/2, m/2].
    """
    values = x.signed() if isinstance(x, TorusPoint) else tuple(x)
    if len(values) != eps.n:
        raise DomainMismatchError(f"dimension mismatch: {len(values)} vs {eps.n}")
    return tuple(v * e for v, e in zip(values, eps.signs))


def inner_sign(eps: SignVector, other: SignVector) -> int:
    """<eps, eps'> = sum_j eps_j eps'_j."""
    if eps.n != other.n:
        raise DomainMismatchError(f"dimension mismatch: {eps.n} vs {other.n}")
    return sum(a * b for a, b in zip(eps.signs, other.signs))
