"""
Tests for functions on the torus and codomain norms.

Tests cover:
1. Exact norms ||v||_p^q and the exact/float split
2. Translation and permutation of functions
3. Exact equality and the float tolerance
4. JSON documents
"""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotype_bench.errors import DomainMismatchError, ExactModeError, PreconditionError
from cotype_bench.torus.functions import (
    NormSpec,
    ScalarMode,
    TorusFunction,
    at_most,
    format_scalar,
    norm_q_power,
)
from cotype_bench.torus.points import TorusPoint, compose, permute, torus_points


def coordinate_code(m: int, n: int) -> TorusFunction:
    """x -> x_0 + 10 x_1 + 100 x_2 + ..., which tells the coordinates apart."""
    return TorusFunction.from_callable(m, n, lambda x: sum(c * 10**i for i, c in enumerate(x)))


def test_norm_q_power():
    """Test ||v||_p^q for closed and non-closed (p, q)."""
    assert norm_q_power((3, 4), NormSpec(2, 2)) == 25
    assert norm_q_power((3, -4), NormSpec(math.inf, 3)) == 64
    assert norm_q_power((3, -4), NormSpec(1, 1)) == 7
    assert norm_q_power((Fraction(1, 2),), NormSpec(3, 2)) == Fraction(1, 4)
    assert norm_q_power((3, 4), NormSpec(2, 1), ScalarMode.FLOAT) == pytest.approx(5.0)

    with pytest.raises(ExactModeError):
        norm_q_power((3, 4), NormSpec(2, 1))
    with pytest.raises(PreconditionError):
        NormSpec(2, Fraction(1, 2))
    with pytest.raises(PreconditionError):
        NormSpec(Fraction(3, 2), 2)

    assert NormSpec(2, 4).exact_closed
    assert not NormSpec(2, 3).exact_closed
    assert NormSpec(math.inf, 2).describe() == {"p": "inf", "q": 2}

    print("* Norms: exact when q is a multiple of p or p = inf")


def test_translate():
    """Test that translate(a) is x -> f(x + a)."""
    f = coordinate_code(4, 2)
    g = f.translate((1, 3))

    for x in torus_points(4, 2):
        assert g(x) == f(x + (1, 3))

    print("* translate: g(x) = f(x + a) on all of Z_4^2")


def test_permute_matches_pointwise_definition():
    """Test f^pi(x) = f(x^pi)."""
    f = coordinate_code(3, 3)
    pi = (1, 2, 0)
    g = f.permute(pi)

    for x in torus_points(3, 3):
        assert g(x) == f(permute(x, pi))

    print("* permute: f^pi(x) = f(x^pi)")


@given(st.permutations(range(3)), st.permutations(range(3)))
def test_permute_is_an_action(pi, sigma):
    """Test (f^pi)^sigma = f^(sigma o pi)."""
    f = coordinate_code(3, 3)

    assert f.permute(pi).permute(sigma).equals(f.permute(compose(sigma, pi)))


def test_algebra_and_equality():
    """Test linear combinations, exact equality and float tolerance."""
    f = coordinate_code(4, 2)

    assert (f + f).equals(f.scale(2))
    assert (f - f).equals(f.scale(0))
    assert f.add_constant([1]).mismatches(f) == 16

    near = TorusFunction(2, 1, np.array([[1.0], [2.0 + 1e-12]]), ScalarMode.FLOAT)
    far = TorusFunction(2, 1, np.array([[1.0], [2.1]]), ScalarMode.FLOAT)
    base = TorusFunction(2, 1, np.array([[1.0], [2.0]]), ScalarMode.FLOAT)
    assert base.equals(near)
    assert base.mismatches(far) == 1

    with pytest.raises(DomainMismatchError):
        f + coordinate_code(4, 1)
    with pytest.raises(DomainMismatchError):
        base + TorusFunction(2, 1, np.array([[1], [2]]))

    print("* Algebra: exact equality, float tolerance 1e-9")


def test_exact_mode_rejects_floats():
    """Test that exact functions only hold rationals."""
    with pytest.raises(ExactModeError):
        TorusFunction(2, 1, np.array([[0.5], [1.0]]))
    with pytest.raises(ExactModeError):
        TorusFunction.from_rows(2, 1, [[0.5], [1.0]])
    with pytest.raises(DomainMismatchError):
        TorusFunction(3, 2, np.zeros((3, 2, 1), dtype=np.int64))

    print("* Exact mode: float values rejected")


def test_random_integer_is_seeded():
    """Test that random functions depend only on the seed."""
    first = TorusFunction.random_integer(4, 2, 3, 5, np.random.default_rng(7))
    second = TorusFunction.random_integer(4, 2, 3, 5, np.random.default_rng(7))

    assert first.equals(second)
    assert first.d == 3
    assert all(-5 <= v <= 5 for v in first.values.flat)

    print("* random_integer: same seed, same table")


def test_json_document():
    """Test that the JSON document restores the same function."""
    f = coordinate_code(3, 2).scale(Fraction(1, 3))
    restored = TorusFunction.from_json(f.to_json())

    assert restored.equals(f)
    assert f.to_document().values[1] == ["10/3"]

    print("* JSON: rationals stored as num/den strings")


def test_scalar_helpers():
    """Test format_scalar and at_most."""
    assert format_scalar(Fraction(-691, 2730)) == "-691/2730"
    assert format_scalar(0.5) == 0.5
    assert format_scalar(None) is None
    assert at_most(Fraction(1, 3), Fraction(1, 3))
    assert not at_most(Fraction(1, 2), Fraction(1, 3))
    assert at_most(1.0 + 1e-12, 1.0)
    assert not at_most(1.1, 1.0)

    print("* Helpers: num/den strings, exact and tolerant comparisons")


def test_point_evaluation_checks_domain():
    """Test that evaluation rejects points of another torus."""
    f = coordinate_code(4, 2)

    assert f(TorusPoint((1, 2), 4)) == (21,)
    with pytest.raises(DomainMismatchError):
        f(TorusPoint((1, 2), 5))
