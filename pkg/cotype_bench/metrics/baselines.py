"""Frozen constants used as regression baselines by the suites and the tests."""

from fractions import Fraction

# (1/n) sum_j E||f(x+e_j) - f(x)||^q <= ELL1_CONSTANT 2^q E_{sigma x mu} ||f(x+eps) - f(x)||^q
ELL1_CONSTANT = 3

# metric cotype ratio bound for n=2, q=2
METRIC_COTYPE_RATIO_BOUND = Fraction(9, 2)

# max_s A^1(f_s) >= c k for the jigsaw family at n=1, m=48
APPROXIMATION_GROWTH_C = Fraction(1, 4)

# c min(sqrt(np), np) <= E[Z] <= C min(sqrt(np), np)
ABS_SUM_WINDOW = (Fraction(1, 3), Fraction(1))

BERNOULLI_BOUND_RATIO_N12 = Fraction(4, 3)


def metric_cotype_ratio_bound(n: int, q: int) -> Fraction:
    """min(3n, n 3^n / 2^q)."""
    return min(Fraction(3 * n), Fraction(n * 3**n, 2**q))


def combine_constant(q: int) -> int:
    """4 3^(q-1), valid for real valued functions and integer q >= 2."""
    return 4 * 3 ** (q - 1)
