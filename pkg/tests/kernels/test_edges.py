"""
Tests for edge measures and the energy functional.

Tests cover:
1. Total mass and symmetry of beta1, beta2 and their mixture
2. The normalizer Z of beta2
3. Energy of constants, of |x| and translation invariance
"""

from fractions import Fraction

import numpy as np
import pytest

from cotype_bench.errors import DomainMismatchError, ExactModeError
from cotype_bench.kernels.edges import beta1, beta2, beta2_normalizer, beta3, edge_energy
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.torus.functions import NormSpec, TorusFunction
from cotype_bench.torus.points import TorusPoint


@pytest.mark.parametrize("n, m, k, q", [(1, 4, 1, 2), (2, 8, 3, 2), (3, 8, 3, 3)])
def test_measures_are_probabilities(n, m, k, q):
    """Test total mass 1 and symmetry."""
    params = SchemeParams(n=n, m=m, k=k, q=q)

    for beta in (beta1(params), beta2(params), beta3(params)):
        assert beta.total_mass() == 1
        assert beta.is_symmetric()

    print(f"* Edge measures on Z_{m}^{n}: mass 1, symmetric")


def test_beta2_normalizer():
    """Test Z = sum_l (n/k)^(q l)."""
    assert beta2_normalizer(2, 4, 2) == Fraction(21, 16)
    assert beta2_normalizer(1, 1, 3) == 2

    with pytest.raises(ExactModeError):
        beta2_normalizer(2, 4, Fraction(1, 2))

    print("* beta2 normalizer: Z(2, 4, 2) = 21/16")


def test_pair_weights():
    """Test pair weights, zero outside E_inf."""
    params = SchemeParams(n=2, m=8, k=3)
    b1 = beta1(params)
    x = TorusPoint((0, 0), 8)

    assert b1.weight(x, TorusPoint((1, 7), 8)) == Fraction(1, 2 * 64 * 4)
    assert b1.weight(x, TorusPoint((1, 0), 8)) == Fraction(1, 2 * 64 * 4)
    assert b1.weight(x, TorusPoint((2, 0), 8)) == 0
    assert b1.weight(x, x) == 0

    with pytest.raises(DomainMismatchError):
        b1.weight(x, TorusPoint((1,), 8))

    print("* beta1: diagonal and axis edges weighted 1/512 on Z_8^2")


def test_energy_values():
    """Test the energy of constants and of |x| on Z_4."""
    params = SchemeParams(n=1, m=4, k=1)
    spec = NormSpec(2, 2)
    f = TorusFunction.from_callable(4, 1, lambda x: min(x[0], 4 - x[0]))

    assert edge_energy(f, beta1(params), spec) == 1
    assert edge_energy(TorusFunction.constant(4, 1, [3]), beta1(params), spec) == 0

    print("* Energy: |x| on Z_4 under beta1 is 1")


def test_energy_translation_invariance():
    """Test energy(f(. + a)) = energy(f)."""
    params = SchemeParams(n=2, m=8, k=3)
    spec = NormSpec(2, 2)
    f = TorusFunction.random_integer(8, 2, 2, 4, np.random.default_rng(11))

    for beta in (beta1(params), beta2(params)):
        assert edge_energy(f.translate((3, 5)), beta, spec) == edge_energy(f, beta, spec)

    print("* Energy: translation invariant")
