"""
Classical and bivariate Bernoulli numbers in exact arithmetic.

The bivariate numbers B_{r,s} are the coefficients of the exponential
generating function

    F(x, y) = (x - y) e^(x + y) / (e^x - e^y) = sum_{r,s} B_{r,s} x^r y^s / (r! s!).

They are computed from the factorization F(x, y) = e^x G(x - y) with
G(u) = u / (e^u - 1). The defining recursion

    r - s = sum_{a<r} B_{a,s} C(r,a) - sum_{b<s} B_{r,b} C(s,b)

is kept as an independent verification predicate.
"""

import csv
import io
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from cotype_bench.errors import PreconditionError
from cotype_bench.torus.functions import format_scalar

logger = logging.getLogger(__name__)

GOLDEN_CSV = Path(__file__).parent / "data" / "bernoulli_12.csv"


def classical_bernoulli(N: int) -> List[Fraction]:
    """B_0..B_N from r = sum_{a<r} B_a C(r, a), so B_1 = 1/2."""
    if N < 0:
        raise PreconditionError("N must be >= 0")
    numbers: List[Fraction] = []
    for r in range(1, N + 2):
        partial = sum((numbers[a] * comb(r, a) for a in range(r - 1)), Fraction(0))
        numbers.append((r - partial) / r)
    return numbers


@lru_cache(maxsize=None)
def _bernoulli_minus(N: int) -> Tuple[Fraction, ...]:
    """B^-_0..B^-_N with B^-_1 = -1/2, from sum_{j<=t} C(t+1, j) B^-_j = 0."""
    numbers = [Fraction(1)]
    for t in range(1, N + 1):
        partial = sum((comb(t + 1, j) * numbers[j] for j in range(t)), Fraction(0))
        numbers.append(-partial / (t + 1))
    return tuple(numbers)


@dataclass(frozen=True)
class BernoulliTable:
    """The (N+1) x (N+1) table of B_{r,s}."""

    N: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.N + 1 or any(len(row) != self.N + 1 for row in self.entries):
            raise PreconditionError(f"table must be {self.N + 1} x {self.N + 1}")

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        r, s = index
        if not (0 <= r <= self.N and 0 <= s <= self.N):
            raise PreconditionError(f"B_{{{r},{s}}} is outside the table (N={self.N})")
        return self.entries[r][s]

    def column(self, s: int) -> List[Fraction]:
        return [row[s] for row in self.entries]

    def is_symmetric(self) -> bool:
        return all(self.entries[r][s] == self.entries[s][r] for r in range(self.N + 1) for s in range(r))

    def to_csv(self) -> str:
        """Header row and column carry the indices; entries are "num/den" strings."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["r/s"] + list(range(self.N + 1)))
        for r, row in enumerate(self.entries):
            writer.writerow([r] + [format_scalar(v) for v in row])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "BernoulliTable":
        rows = list(csv.reader(io.StringIO(text)))
        body = [tuple(Fraction(v) for v in row[1:]) for row in rows[1:] if row]
        return cls(len(body) - 1, tuple(body))


def bivariate_bernoulli(N: int) -> BernoulliTable:
    """B_{r,s} = r! s! (-1)^s sum_{t=s}^{r+s} B^-_t C(t,s) / (t! (r+s-t)!)."""
    if N < 0:
        raise PreconditionError("N must be >= 0")
    minus = _bernoulli_minus(2 * N)
    rows = []
    for r in range(N + 1):
        row = []
        for s in range(N + 1):
            total = sum(
                (minus[t] * comb(t, s) / (factorial(t) * factorial(r + s - t)) for t in range(s, r + s + 1)),
                Fraction(0),
            )
            row.append(factorial(r) * factorial(s) * (-1) ** s * total)
        rows.append(tuple(row))
    logger.debug("Computed bivariate Bernoulli table up to N=%d", N)
    return BernoulliTable(N, tuple(rows))


def verify_bivariate_recursion(table: BernoulliTable) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Check the defining recursion on every (r, s) of the table.

    Returns (True, None) or (False, first failing (r, s)).
    """
    for r in range(table.N + 1):
        for s in range(table.N + 1):
            rhs = sum((table[a, s] * comb(r, a) for a in range(r)), Fraction(0))
            rhs -= sum((table[r, b] * comb(s, b) for b in range(s)), Fraction(0))
            if rhs != r - s:
                logger.warning("Bivariate recursion fails at (r, s) = (%d, %d)", r, s)
                return False, (r, s)
    return True, None


def bernoulli_bound_ratio(table: BernoulliTable) -> Fraction:
    """max_{r,s<=N} |B_{r,s}| 2^(r+s) / (r! s!)."""
    return max(
        abs(table[r, s]) * 2 ** (r + s) / (factorial(r) * factorial(s))
        for r in range(table.N + 1)
        for s in range(table.N + 1)
    )


def generating_function(x: float, y: float) -> float:
    """(x - y) e^(x + y) / (e^x - e^y)."""
    return (x - y) * math.exp(x + y) / (math.exp(x) - math.exp(y))


def truncated_series(table: BernoulliTable, x: Union[Fraction, int], y: Union[Fraction, int]) -> Fraction:
    """sum_{r,s<=N} B_{r,s} x^r y^s / (r! s!) evaluated exactly."""
    x, y = Fraction(x), Fraction(y)
    return sum(
        (table[r, s] * x**r * y**s / (factorial(r) * factorial(s)) for r in range(table.N + 1) for s in range(table.N + 1)),
        Fraction(0),
    )


def generating_function_check(
    x: Fraction = Fraction(1, 2), y: Fraction = Fraction(1, 4), N: int = 20
) -> Tuple[float, float, float]:
    """Float cross-check of the generating function; returns (series, closed form, |error|)."""
    series = float(truncated_series(bivariate_bernoulli(N), x, y))
    closed = generating_function(float(x), float(y))
    return series, closed, abs(series - closed)


def load_golden_table(path: Path = GOLDEN_CSV) -> BernoulliTable:
    return BernoulliTable.from_csv(path.read_text(encoding="utf-8"))


def classical_column_matches(table: BernoulliTable, classical: Sequence[Fraction]) -> bool:
    return table.column(0) == list(classical[: table.N + 1])
