"""
Tests for scheme parameters, point sets, kernels and convolution.

Tests cover:
1. Parameter validation (k odd, k < m/2, m even)
2. Sizes of S(j,k), L_B and the all-odd box
3. Kernel validation, permutation and documents
4. Naive and separable convolution, E_j and Delta_B
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cotype_bench.errors import DomainMismatchError, PreconditionError
from cotype_bench.kernels.kernel import Kernel, KernelDocument, average_kernels, convolve
from cotype_bench.kernels.operators import Delta_B, E_j, s_jk_kernel, scheme_kernels
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.kernels.point_sets import build_L_B, build_odd_box, build_S_jk
from cotype_bench.torus.functions import TorusFunction
from cotype_bench.torus.points import TorusPoint, compose, transposition


def test_params_validation():
    """Test the constraints on (n, m, k, q)."""
    params = SchemeParams(n=2, m=8, k=3)
    assert params.box_size == 12
    assert params.odd_box_size == 16
    assert params.even_offsets() == (-2, 0, 2)
    assert params.odd_offsets() == (-3, -1, 1, 3)

    for bad in ({"n": 1, "m": 8, "k": 2}, {"n": 1, "m": 8, "k": 5}, {"n": 1, "m": 9, "k": 1}, {"n": 0, "m": 8, "k": 1}):
        with pytest.raises(PreconditionError):
            SchemeParams(**bad)
    with pytest.raises(PreconditionError):
        SchemeParams(n=1, m=6, k=1).require_pipeline_regime()

    print("* SchemeParams: k odd, k < m/2, m even")


def test_point_set_sizes():
    """Test |S(j,k)| = k(k+1)^(n-1), |L_B| = k^|B| and |odd box| = (k+1)^n."""
    params = SchemeParams(n=3, m=8, k=3)

    for j in range(3):
        points = build_S_jk(params, j)
        assert len(points) == 3 * 4 * 4
        assert all(p.signed()[j] % 2 == 0 for p in points)
    assert len(build_L_B(params, (0, 2))) == 9
    assert build_L_B(params, ()) == [TorusPoint.zero(3, 8)]
    assert len(build_odd_box(params)) == 64

    with pytest.raises(PreconditionError):
        build_S_jk(params, 3)
    with pytest.raises(PreconditionError):
        build_L_B(params, (5,))

    print("* Point sets: 48 points in S(j,3) on Z_8^3, 64 in the odd box")


def test_kernel_validation():
    """Test that kernels are probability measures with distinct support."""
    with pytest.raises(PreconditionError):
        Kernel.from_weights(4, 1, {(0,): Fraction(1, 2)})
    with pytest.raises(PreconditionError):
        Kernel.from_weights(4, 1, {(0,): Fraction(3, 2), (1,): Fraction(-1, 2)})
    with pytest.raises(PreconditionError):
        Kernel.uniform(4, 1, [(1,), (5,)])

    nu = Kernel.uniform(4, 2, [(0, 0), (1, 3)])
    assert nu.weight((1, -1)) == Fraction(1, 2)
    assert nu.weight((2, 2)) == 0
    assert len(nu) == 2

    print("* Kernel: mass 1, positive weights, distinct support")


def test_kernel_permutation():
    """Test nu^pi(x) = nu(x^pi), the action law and S(j,k) covariance."""
    nu = Kernel.uniform(5, 3, [(1, 2, 3), (0, 0, 4)])
    pi, sigma = (1, 2, 0), (0, 2, 1)

    assert nu.permute(pi).weight((3, 1, 2)) == Fraction(1, 2)
    assert nu.permute(pi).permute(sigma) == nu.permute(compose(sigma, pi))

    params = SchemeParams(n=3, m=8, k=3)
    assert s_jk_kernel(params, 0).permute(transposition(0, 2, 3)) == s_jk_kernel(params, 2)

    print("* Kernel.permute: support relabeled by pi^-1")


def test_kernel_document():
    """Test that documents restore kernels and their product factors."""
    nu = s_jk_kernel(SchemeParams(n=2, m=8, k=3), 1)
    restored = Kernel.from_document(KernelDocument.model_validate_json(nu.to_document().model_dump_json()))

    assert restored == nu
    assert restored.is_product

    print("* KernelDocument: product kernel restored with factors")


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_separable_matches_naive(seed):
    """Test that the separable path agrees with the direct sum."""
    rng = np.random.default_rng(seed)
    params = SchemeParams(n=2, m=8, k=3)
    f = TorusFunction.random_integer(8, 2, 2, 5, rng)

    for nu in scheme_kernels(params):
        assert convolve(f, nu, "naive").equals(convolve(f, nu, "separable"))


def test_convolution_definition():
    """Test (f * nu)(x) = sum_y nu(y) f(x - y) for a point mass and a mixture."""
    f = TorusFunction.from_callable(6, 1, lambda x: x[0] ** 2)
    shifted = convolve(f, Kernel.point_mass(TorusPoint((2,), 6)))
    assert shifted.equals(f.translate((-2,)))

    mixture = average_kernels([Kernel.point_mass(TorusPoint((0,), 6)), Kernel.point_mass(TorusPoint((1,), 6))])
    averaged = convolve(f, mixture)
    assert averaged(TorusPoint((3,), 6)) == (Fraction(9 + 4, 2),)

    with pytest.raises(PreconditionError):
        convolve(f, mixture, "separable")
    with pytest.raises(DomainMismatchError):
        convolve(f, Kernel.point_mass(TorusPoint((0, 0), 6)))

    print("* convolve: point masses translate, mixtures average")


def test_averaging_operators():
    """Test that E_j and Delta_B fix constants and commute with translations."""
    params = SchemeParams(n=2, m=8, k=3)
    constant = TorusFunction.constant(8, 2, [Fraction(7, 2)])
    f = TorusFunction.random_integer(8, 2, 1, 5, np.random.default_rng(3))

    for j in range(2):
        assert E_j(constant, params, j).equals(constant)
        assert E_j(f.translate((1, 2)), params, j).equals(E_j(f, params, j).translate((1, 2)))
    assert Delta_B(f, params, ()).equals(f)
    assert Delta_B(constant, params, (0, 1)).equals(constant)

    print("* E_j, Delta_B: constants fixed, translation covariant")


def test_smoothing_example():
    """Test E_1 |x| on Z_8 with k = 3."""
    params = SchemeParams(n=1, m=8, k=3)
    f = TorusFunction.from_callable(8, 1, lambda x: min(x[0], 8 - x[0]))
    expected = [Fraction(v, 3) for v in (4, 5, 6, 7, 8, 7, 6, 5)]

    assert [E_j(f, params, 0)(TorusPoint((x,), 8))[0] for x in range(8)] == expected

    print("* E_1 |x|: (4/3, 5/3, 2, 7/3, 8/3, 7/3, 2, 5/3)")
