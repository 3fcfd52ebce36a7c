"""
Tests for averaging a scheme over coordinate permutations.

Tests cover:
1. Covariance and marginal agreement of symmetrized random kernels
2. The convolution, norm and energy identities under permutations
3. Symmetrization never increases the approximation numerator
4. The S(j,k) scheme as a fixed point and the n! budget
"""

import itertools

import numpy as np
import pytest

from cotype_bench.errors import BudgetExceededError
from cotype_bench.kernels.edges import beta1, beta2
from cotype_bench.kernels.kernel import Kernel
from cotype_bench.kernels.operators import scheme_kernels
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.lower_bounds.symmetrization import (
    MAX_SYMMETRIZE_N,
    conv_perm_holds,
    energy_identity_holds,
    marginals_agree,
    norm_identity_holds,
    random_kernel_family,
    symmetrize,
    symmetrize_kernels,
    symmetrized_approximation,
    transposition_covariant,
)
from cotype_bench.torus.functions import NormSpec, TorusFunction
from cotype_bench.torus.points import TorusPoint


@pytest.fixture
def setting():
    rng = np.random.default_rng([3, 4, 2024])
    params = SchemeParams(n=3, m=4, k=1, q=2)
    kernels = random_kernel_family(4, 3, rng)
    f = TorusFunction.random_integer(4, 3, 2, 3, rng)
    return params, kernels, f


def test_symmetrized_kernels(setting):
    """Test transposition covariance and marginal agreement."""
    params, kernels, _ = setting
    scheme = symmetrize(kernels, beta1(params), beta2(params))

    assert len(scheme.kernels) == 3
    assert all(nu.weights and sum(nu.weights.values()) == 1 for nu in scheme.kernels)
    assert transposition_covariant(scheme.kernels)
    assert marginals_agree(scheme.kernels)
    assert scheme.first.total_mass() == 1
    assert scheme.second.total_mass() == 1

    print("* Symmetrized random scheme: covariant, marginals agree")


def test_permutation_identities(setting):
    """Test f * nu^pi = (f^(pi^-1) * nu)^pi and the norm identity for every pi."""
    _, kernels, f = setting
    spec = NormSpec(2, 2)

    for pi in itertools.permutations(range(3)):
        for nu in kernels:
            assert conv_perm_holds(f, nu, pi)
            assert norm_identity_holds(f, nu, pi, spec)


def test_energy_identity(setting):
    """Test energy(f, bar beta) as the average over permuted functions."""
    params, _, f = setting
    spec = NormSpec(2, 2)

    assert energy_identity_holds(f, beta1(params), spec)
    assert energy_identity_holds(f, beta2(params), spec)


def test_symmetrized_approximation(setting):
    """Test that averaging kernels does not increase the approximation numerator."""
    _, kernels, f = setting

    left, right = symmetrized_approximation(f, kernels, NormSpec(2, 2))

    assert left <= right

    print(f"* Symmetrized approximation: {left} <= {right}")


def test_scheme_is_fixed_point():
    """Test that the S(j,k) scheme is already symmetric."""
    params = SchemeParams(n=3, m=8, k=3)
    kernels = scheme_kernels(params)

    assert symmetrize_kernels(kernels) == kernels
    assert transposition_covariant(kernels)


def test_permutation_budget():
    """Test that n! enumeration is refused beyond the limit."""
    n = MAX_SYMMETRIZE_N + 1
    kernels = [Kernel.point_mass(TorusPoint.zero(n, 4))] * n

    with pytest.raises(BudgetExceededError):
        symmetrize_kernels(kernels)
