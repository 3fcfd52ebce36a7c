"""
Tests for the scheme constants and the inequality pipeline.

Tests cover:
1. Numerators of A^q and S^q for |x| on Z_8 with k = 3
2. Invariances of A^q and S^q
3. Every pipeline inequality on seeded random functions
4. The pipeline regime 4 | m
"""

from fractions import Fraction

import numpy as np
import pytest

from cotype_bench.errors import DomainMismatchError, PreconditionError
from cotype_bench.families import torus_abs_fn
from cotype_bench.kernels.operators import scheme_kernels
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.metrics.pipeline import verify_pipeline
from cotype_bench.metrics.scheme import approximation_numerator, scheme_constants, smoothing_numerator
from cotype_bench.torus.functions import NormSpec, ScalarMode, TorusFunction

PIPELINE_CHECKS = ["triangle", "telescope", "integrated", "ell1", "combine"]


def test_numerators_of_torus_abs():
    """Test the smoothing numerator 1/3 and the approximation numerator 2/3."""
    params = SchemeParams(n=1, m=8, k=3, q=2)
    f = torus_abs_fn(8, 1)
    kernels = scheme_kernels(params)

    assert approximation_numerator(f, kernels, NormSpec(2, 2)) == Fraction(2, 3)
    assert smoothing_numerator(f, kernels, NormSpec(2, 2)) == Fraction(1, 3)

    constants = scheme_constants(params, f)
    assert constants.approximation_numerator == Fraction(2, 3)
    assert constants.A_q == constants.approximation_numerator / constants.approximation_denominator
    assert constants.quantities()["smoothing_numerator"] == "1/3"

    print("* Scheme numerators of |x| on Z_8: 2/3 and 1/3")


def test_constant_function_has_no_constants():
    """Test that a constant function has zero denominators."""
    params = SchemeParams(n=2, m=8, k=3)
    constants = scheme_constants(params, TorusFunction.constant(8, 2, [1]))

    assert constants.A_q is None
    assert constants.S_q is None


def test_scheme_invariances():
    """Test that A^q and S^q ignore translations, coordinate permutations, constant shifts and scaling."""
    params = SchemeParams(n=2, m=8, k=3)
    f = TorusFunction.random_integer(8, 2, 1, 4, np.random.default_rng(9))
    base = scheme_constants(params, f)

    for g in (f.translate((3, 1)), f.permute((1, 0)), f.add_constant([5]), f.scale(2)):
        other = scheme_constants(params, g)
        assert (other.A_q, other.S_q) == (base.A_q, base.S_q)

    print(f"* Scheme constants on Z_8^2: A^2 = {base.A_q}, S^2 = {base.S_q}")


def test_scheme_rejects_other_tori():
    """Test that the function must live on the parameters' torus."""
    with pytest.raises(DomainMismatchError):
        scheme_constants(SchemeParams(n=2, m=8, k=3), torus_abs_fn(8, 1))


@pytest.mark.parametrize("seed", range(50))
def test_pipeline_holds(seed):
    """Test every inequality of the pipeline on a seeded random function."""
    params = SchemeParams(n=2, m=8, k=3, q=2)
    f = TorusFunction.random_integer(8, 2, 1, 6, np.random.default_rng(seed))

    report = verify_pipeline(f, params)

    assert [check.name for check in report.checks] == PIPELINE_CHECKS
    for check in report.checks:
        assert check.holds, (check.name, check.detail())
    assert report.check("combine").skipped is None
    assert report.check("combine").constant == 12

    print(f"* Pipeline seed={seed}: all inequalities hold")


def test_pipeline_vector_valued_skips_combine():
    """Test that combine is skipped for vector valued functions."""
    params = SchemeParams(n=1, m=8, k=3, q=2)
    f = TorusFunction.random_integer(8, 1, 2, 6, np.random.default_rng(4))

    report = verify_pipeline(f, params)

    assert report.passed
    assert report.check("combine").skipped is not None
    assert report.check("combine").detail() == {"reason": report.check("combine").skipped}


def test_pipeline_float_mode():
    """Test the pipeline in float arithmetic with a non-integer power."""
    params = SchemeParams(n=1, m=8, k=1, q=2)
    f = TorusFunction.random_integer(8, 1, 1, 6, np.random.default_rng(2), ScalarMode.FLOAT)

    report = verify_pipeline(f, params, NormSpec(2, 1.5))

    assert report.passed
    assert report.check("combine").skipped is not None


def test_pipeline_needs_four_dividing_m():
    """Test that m = 6 is outside the pipeline regime."""
    params = SchemeParams(n=1, m=6, k=1)

    with pytest.raises(PreconditionError):
        verify_pipeline(torus_abs_fn(6, 1), params)
