"""
Tests for torus points, sign vectors and coordinate permutations.

Tests cover:
1. Signed representatives and the torus absolute value
2. Addition mod m with points, sign vectors and integer offsets
3. Permutations acting on coordinates as a group action
4. Sign alphabets and the coordinatewise product
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotype_bench.errors import DomainMismatchError, PreconditionError
from cotype_bench.torus.measures import Domain, mean_over
from cotype_bench.torus.points import (
    SignAlphabet,
    SignVector,
    TorusPoint,
    add_points,
    check_permutation,
    compose,
    full_signs,
    inner_sign,
    inverse_permutation,
    mixed_signs,
    odot,
    permute,
    signed_rep,
    torus_abs,
    torus_points,
    transposition,
)


def test_signed_rep_and_torus_abs():
    """Test representatives in [-m/2, m/2) and |z| = min(z, m - z)."""
    assert signed_rep(3, 8) == 3
    assert signed_rep(5, 8) == -3
    assert signed_rep(4, 8) == -4
    assert signed_rep(-1, 8) == -1
    assert [torus_abs(z, 8) for z in range(8)] == [0, 1, 2, 3, 4, 3, 2, 1]

    with pytest.raises(PreconditionError):
        torus_abs(8, 8)

    print("* signed_rep/torus_abs: representatives and distances on Z_8")


def test_point_addition_wraps():
    """Test that addition reduces every coordinate mod m."""
    x = TorusPoint((7, 1), 8)

    assert x + (1, -2) == TorusPoint((0, 7), 8)
    assert x + SignVector((1, 1)) == TorusPoint((0, 2), 8)
    assert x - x == TorusPoint.zero(2, 8)
    assert TorusPoint.basis(3, 1, 8, scale=4) == TorusPoint((0, 4, 0), 8)

    with pytest.raises(DomainMismatchError):
        x + TorusPoint((1, 1), 6)
    with pytest.raises(PreconditionError):
        TorusPoint((8, 0), 8)

    print("* Addition: wraps mod m and rejects mismatched moduli")


def test_add_points_examples():
    """Test add_points with a point, a sign vector and a scaled basis vector."""
    assert add_points(TorusPoint((7,), 8), TorusPoint((3,), 8)) == TorusPoint((2,), 8)
    assert add_points(TorusPoint((0, 3), 4), SignVector((-1, 1))) == TorusPoint((3, 0), 4)
    assert add_points(TorusPoint((1,), 8), TorusPoint.basis(1, 0, 8, scale=4)) == TorusPoint((5,), 8)

    with pytest.raises(DomainMismatchError):
        add_points(TorusPoint((0, 0), 8), SignVector((1, 1, 1)))

    print("* add_points: 7 + 3 = 2 on Z_8, (0,3) + (-1,1) = (3,0) on Z_4^2")


@given(st.permutations(range(4)), st.permutations(range(4)))
def test_permutation_group_action(pi, sigma):
    """Test (x^pi)^sigma = x^(pi o sigma) and x^pi^(pi^-1) = x."""
    x = TorusPoint((0, 1, 2, 3), 5)

    assert permute(permute(x, pi), sigma) == permute(x, compose(pi, sigma))
    assert permute(permute(x, pi), inverse_permutation(pi)) == x


def test_permutation_validation():
    """Test that only permutations of range(n) are accepted."""
    assert check_permutation([1, 0, 2], 3) == (1, 0, 2)
    assert transposition(0, 2, 3) == (2, 1, 0)

    with pytest.raises(PreconditionError):
        check_permutation((0, 0, 1), 3)
    with pytest.raises(PreconditionError):
        permute(TorusPoint((0, 1), 4), (0, 1, 2))

    print("* Permutations: repeated and wrongly sized tuples rejected")


def test_sign_vectors():
    """Test alphabets, enumeration, inner products and x ⊙ eps."""
    assert len(list(full_signs(3))) == 8
    assert len(list(mixed_signs(3))) == 27
    assert SignVector((0, 1), SignAlphabet.MIXED).n == 2
    assert inner_sign(SignVector((1, -1)), SignVector((1, 1))) == 0
    assert odot(TorusPoint((7, 3), 8), SignVector((1, -1))) == (-1, -3)

    with pytest.raises(PreconditionError):
        SignVector((0, 1))
    with pytest.raises(DomainMismatchError):
        odot(TorusPoint((1, 2), 8), SignVector((1,)))

    print("* Sign vectors: 2^n full, 3^n mixed, odot on signed representatives")


def test_uniform_averages():
    """Test the exact averages over mu, tau and sigma."""
    assert mean_over(Domain.TORUS, lambda x: torus_abs(x[0], 4), n=1, m=4) == 1
    assert mean_over(Domain.FULL_SIGNS, lambda e: e[0] * e[1], n=2) == 0
    assert mean_over(Domain.MIXED_SIGNS, lambda e: abs(e[0]), n=2) == pytest.approx(2 / 3)
    assert len(list(torus_points(3, 2))) == 9

    print("* Averages: E_mu |x| = 1 on Z_4, E_sigma |eps_1| = 2/3")
