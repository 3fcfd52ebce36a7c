"""Parameters (n, m, k, q) of the S(j,k) smoothing and approximation scheme."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from cotype_bench.errors import PreconditionError


@dataclass(frozen=True)
class SchemeParams:
    """
    Scheme parameters.

    Attributes:
        n: Torus dimension
        m: Modulus, even
        k: Box half-width, odd with k < m/2
        q: Power exponent of the scheme inequalities
    """

    n: int
    m: int
    k: int
    q: Union[int, Fraction, float] = 2

    def __post_init__(self) -> None:
        if self.n < 1:
            raise PreconditionError(f"n must be positive, got {self.n}")
        if self.m < 4 or self.m % 2:
            raise PreconditionError(f"m must be even and at least 4, got {self.m}")
        if self.k < 1 or self.k % 2 == 0:
            raise PreconditionError(f"k must be a positive odd integer, got {self.k}")
        if 2 * self.k >= self.m:
            raise PreconditionError(f"k must satisfy k < m/2, got k={self.k}, m={self.m}")
        if self.q < 1:
            raise PreconditionError(f"q must be at least 1, got {self.q}")

    @property
    def box_size(self) -> int:
        """|S(j,k)| = k(k+1)^(n-1)."""
        return self.k * (self.k + 1) ** (self.n - 1)

    @property
    def odd_box_size(self) -> int:
        return (self.k + 1) ** self.n

    def require_pipeline_regime(self) -> None:
        """The pipeline inequalities need 4 | m on top of the basic constraints."""
        if self.m % 4:
            raise PreconditionError(f"m must be divisible by 4, got {self.m}")

    def even_offsets(self) -> tuple:
        """The k even integers strictly inside (-k, k)."""
        return tuple(range(-(self.k - 1), self.k, 2))

    def odd_offsets(self) -> tuple:
        """The k+1 odd integers in [-k, k]."""
        return tuple(range(-self.k, self.k + 1, 2))
