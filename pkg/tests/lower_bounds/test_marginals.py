"""
Tests for marginals, tail masses and the smoothing witness f(x) = e_x.

Tests cover:
1. Marginal jump variation of the scheme and of point masses
2. Tail masses (k - s) / k
3. The delta smoothing value and its chain of lower bounds
"""

from fractions import Fraction

import pytest

from cotype_bench.errors import BudgetExceededError, PreconditionError
from cotype_bench.kernels.kernel import Kernel
from cotype_bench.kernels.operators import scheme_kernels
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.lower_bounds.marginals import (
    MarginalDistribution,
    delta_smoothing_value,
    marginal,
    marginal_variation,
    tail_mass,
)
from cotype_bench.torus.points import TorusPoint


@pytest.mark.parametrize("n, k", [(1, 3), (2, 3), (2, 5), (3, 1)])
def test_scheme_marginal_variation(n, k):
    """Test that the S(j,k) scheme has marginal variation exactly 2/k."""
    params = SchemeParams(n=n, m=4 * k + 4, k=k)

    assert marginal_variation(scheme_kernels(params)) == Fraction(2, k)

    print(f"* Marginal variation n={n}, k={k}: 2/{k}")


def test_point_mass_variation():
    """Test that point masses have variation 2."""
    kernels = [Kernel.point_mass(TorusPoint.zero(2, 8))] * 2

    assert marginal_variation(kernels) == 2


def test_marginal_distribution():
    """Test marginals of S(0,3) on Z_8^2 and distribution validation."""
    params = SchemeParams(n=2, m=8, k=3)
    nu = scheme_kernels(params)[0]

    even = marginal(nu, 0)
    odd = marginal(nu, 1)
    assert [even[r] for r in (-2, 0, 2)] == [Fraction(1, 3)] * 3
    assert [odd[r] for r in (-3, -1, 1, 3)] == [Fraction(1, 4)] * 4
    assert odd[0] == 0

    with pytest.raises(PreconditionError):
        marginal(nu, 2)
    with pytest.raises(PreconditionError):
        MarginalDistribution(2, (Fraction(1, 2), Fraction(1, 4)))


@pytest.mark.parametrize("k, s, expected", [(3, 1, Fraction(2, 3)), (7, 3, Fraction(4, 7)), (5, 0, Fraction(4, 5))])
def test_tail_mass(k, s, expected):
    """Test (1/n) sum_j nu_j(|x_j| > s) = (k - s) / k."""
    params = SchemeParams(n=2, m=2 * k + 2, k=k)

    assert tail_mass(scheme_kernels(params), s) == expected


def test_tail_mass_rejects_negative_s():
    with pytest.raises(PreconditionError):
        tail_mass(scheme_kernels(SchemeParams(n=1, m=8, k=3)), -1)


def test_delta_smoothing():
    """Test lhs = 2/3 at n = 1, m = 8, k = 3, q = 1 and the chain at n = 2."""
    report = delta_smoothing_value(SchemeParams(n=1, m=8, k=3, q=1))
    assert report.lhs == Fraction(2, 3)
    assert report.per_coordinate == report.marginal_bound == [Fraction(2, 3)]
    assert report.chain_holds

    wider = delta_smoothing_value(SchemeParams(n=2, m=8, k=3, q=2))
    assert wider.chain_holds
    assert wider.lhs >= wider.lhs_first_moment**2
    assert wider.quantities()["marginal_bound"] == ["2/3", "2/3"]

    print(f"* Delta smoothing: lhs 2/3 on Z_8, {wider.lhs} on Z_8^2")


def test_delta_smoothing_budget():
    """Test the enumeration budget and the integer power requirement."""
    with pytest.raises(BudgetExceededError):
        delta_smoothing_value(SchemeParams(n=2, m=8, k=3), budget=10)
    with pytest.raises(PreconditionError):
        delta_smoothing_value(SchemeParams(n=1, m=8, k=3, q=Fraction(3, 2)))
