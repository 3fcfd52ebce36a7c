"""
The verification suites run by the command line.

Every suite body takes a RunConfig and returns a SuiteOutcome. Bodies are
registered in `cotype_bench.registry.registry` under their command-line name.
"""

import logging
from collections import OrderedDict
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from cotype_bench.bernoulli import (
    GOLDEN_CSV,
    bernoulli_bound_ratio,
    bivariate_bernoulli,
    classical_bernoulli,
    classical_column_matches,
    generating_function_check,
    verify_bivariate_recursion,
)
from cotype_bench.configuration import RunConfig
from cotype_bench.families import NamedFunction, family_flags, function_family
from cotype_bench.identities.verification import (
    MAX_LISTED_FAILURES,
    SweepBudget,
    VerificationReport,
    verify_expansion,
    verify_indicator_sweep,
    verify_vanishing,
    verify_weighted_sums,
)
from cotype_bench.kernels.edges import beta1, beta2
from cotype_bench.kernels.operators import scheme_kernels
from cotype_bench.lower_bounds.jigsaw import approximation_growth, jigsaw, lipschitz_violations
from cotype_bench.lower_bounds.marginals import delta_smoothing_value, marginal_variation, tail_mass
from cotype_bench.lower_bounds.symmetrization import (
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
from cotype_bench.lower_bounds.walks import (
    brute_force_abs_sum,
    closed_form_moments,
    expected_abs_sum,
    moments,
    odd_box_abs_sum,
)
from cotype_bench.metrics.baselines import (
    ABS_SUM_WINDOW,
    APPROXIMATION_GROWTH_C,
    BERNOULLI_BOUND_RATIO_N12,
    metric_cotype_ratio_bound,
)
from cotype_bench.metrics.cotype import metric_cotype_ratio
from cotype_bench.metrics.pipeline import InequalityCheck, verify_pipeline
from cotype_bench.metrics.rademacher import rademacher_cotype_ratio, rademacher_type_ratio
from cotype_bench.metrics.scheme import SchemeConstants, scheme_constants
from cotype_bench.registry import registry
from cotype_bench.reports import SuiteOutcome, write_atomic
from cotype_bench.torus.functions import FLOAT_TOLERANCE, Scalar, ScalarMode, TorusFunction, at_most

logger = logging.getLogger(__name__)

GENERATING_FUNCTION_TOLERANCE = 1e-10
RADEMACHER_VECTORS = 8


def _same(left: Optional[Scalar], right: Optional[Scalar]) -> bool:
    if left is None or right is None:
        return left is right
    if isinstance(left, float) or isinstance(right, float):
        return bool(np.isclose(float(left), float(right), rtol=FLOAT_TOLERANCE, atol=FLOAT_TOLERANCE))
    return left == right


def _family(config: RunConfig, outcome: SuiteOutcome) -> List[NamedFunction]:
    """The configured family, with its flags recorded as quantities."""
    for name, value in family_flags(config).items():
        outcome.quantity(name, value)
    return function_family(config)


def _rotation(n: int) -> Tuple[int, ...]:
    """The cyclic coordinate permutation (1, 2, ..., n-1, 0)."""
    return tuple(range(1, n)) + (0,)


INVARIANCES = (
    "translation_invariance",
    "permutation_invariance",
    "constant_shift_invariance",
    "homogeneity",
)


def _invariance_variants(f: TorusFunction) -> Dict[str, TorusFunction]:
    """Transforms of f that leave every ratio of the suites unchanged, keyed like INVARIANCES."""
    return {
        "translation_invariance": f.translate((1,) * f.n),
        "permutation_invariance": f.permute(_rotation(f.n)),
        "constant_shift_invariance": f.add_constant([1] * f.d),
        "homogeneity": f.scale(Fraction(2) if f.mode is ScalarMode.EXACT else 2.0),
    }


def _record_invariances(outcome: SuiteOutcome, failing: Dict[str, List[Dict[str, object]]], functions: int) -> None:
    for name, failures in failing.items():
        outcome.check(name, not failures, functions=functions, failing=failures[:MAX_LISTED_FAILURES])


def _budget(config: RunConfig) -> SweepBudget:
    return SweepBudget(
        max_tuples=config.budget,
        samples=config.samples,
        seed=config.seed if config.seed is not None else 0,
        allow_sampling=config.allow_sampling,
    )


def _record_sweep(outcome: SuiteOutcome, report: VerificationReport) -> None:
    outcome.check(
        report.identity,
        report.passed,
        checked=report.checked,
        failure_count=report.failure_count,
        mode=report.mode,
        failures=report.failures,
        max_deviation=report.max_deviation,
    )


# bernoulli


def bernoulli_suite(config: RunConfig) -> SuiteOutcome:
    """Bivariate Bernoulli table: recursion, symmetry, classical column, golden CSV, generating function."""
    outcome = SuiteOutcome()
    N = config.bernoulli_n
    table = bivariate_bernoulli(N)

    ok, where = verify_bivariate_recursion(table)
    outcome.check("recursion", ok, N=N, first_failure=where)
    outcome.check("symmetry", table.is_symmetric(), N=N)
    outcome.check("classical_column", classical_column_matches(table, classical_bernoulli(N)), N=N)
    if N >= 1:
        outcome.quantity("B_1_1", table[1, 1])
        outcome.check("B_1_1", table[1, 1] == Fraction(1, 3), value=table[1, 1])
    else:
        outcome.skip("B_1_1", "the table has N=0")

    ratio = bernoulli_bound_ratio(table)
    outcome.quantity("bound_ratio", ratio)
    csv_text = table.to_csv()
    if N == 12:
        golden = GOLDEN_CSV.read_text(encoding="utf-8")
        outcome.check("golden_csv", csv_text == golden, golden=GOLDEN_CSV.name)
        outcome.check("bound_ratio", ratio == BERNOULLI_BOUND_RATIO_N12, value=ratio, golden=BERNOULLI_BOUND_RATIO_N12)
    else:
        outcome.skip("golden_csv", f"the golden table has N=12, got N={N}")
        outcome.skip("bound_ratio", f"the golden ratio is frozen for N=12, got N={N}")
    if config.out:
        write_atomic(Path(config.out).with_suffix(".csv"), csv_text)

    series, closed, error = generating_function_check(N=config.series_n)
    outcome.quantity("generating_function_error", error)
    outcome.check(
        "generating_function",
        error < GENERATING_FUNCTION_TOLERANCE,
        series=series,
        closed_form=closed,
        N=config.series_n,
        tolerance=GENERATING_FUNCTION_TOLERANCE,
    )
    return outcome


# identities


def identities_suite(config: RunConfig) -> SuiteOutcome:
    """Indicator sweep, vanishing, expansion and the weighted-sum identities."""
    outcome = SuiteOutcome()
    params = config.scheme_params()
    budget = _budget(config)

    _record_sweep(outcome, verify_indicator_sweep(params, budget))
    _record_sweep(outcome, verify_vanishing(params, budget))
    _record_sweep(outcome, verify_expansion(params, bivariate_bernoulli(params.n), budget))

    if config.mode != "exact":
        for name in ("b_identity", "a_identity", "odd_box_restriction", "with_cardinality"):
            outcome.skip(name, "the weighted-sum identities are verified in exact arithmetic only")
        return outcome
    work = config.m**config.n * 2**config.n
    if work > config.budget:
        for name in ("b_identity", "a_identity", "odd_box_restriction", "with_cardinality"):
            outcome.skip(name, f"{work} (x, eps) pairs exceed the budget of {config.budget}")
        return outcome

    merged: Dict[str, VerificationReport] = OrderedDict()
    family = _family(config, outcome)
    for descriptor, f in family:
        for report in verify_weighted_sums(f, params):
            total = merged.setdefault(
                report.identity, VerificationReport(identity=report.identity, domain=report.domain)
            )
            total.checked += report.checked
            for failure in report.failures:
                total.record_failure({"function": descriptor, **failure})
            total.failure_count += report.failure_count - len(report.failures)
    for report in merged.values():
        _record_sweep(outcome, report)
    outcome.quantity("functions", len(family))
    return outcome


# cotype


def _rademacher_rows(f: TorusFunction) -> List[List[Scalar]]:
    rows = [list(row) for row in f.values.reshape(-1, f.d) if any(v != 0 for v in row)]
    return rows[:RADEMACHER_VECTORS]


def cotype_suite(config: RunConfig) -> SuiteOutcome:
    """Metric cotype ratio, its frozen bound and the pipeline inequalities over a function family."""
    outcome = SuiteOutcome()
    params = config.scheme_params()
    spec = config.norm_spec
    family = _family(config, outcome)

    worst: Optional[Scalar] = None
    worst_name = None
    pipeline: Dict[str, List[InequalityCheck]] = OrderedDict()
    failing: Dict[str, List[Dict[str, object]]] = OrderedDict((name, []) for name in INVARIANCES)
    for descriptor, f in family:
        report = metric_cotype_ratio(f, spec, descriptor)
        for name, g in _invariance_variants(f).items():
            other = metric_cotype_ratio(g, spec, descriptor).ratio
            if not _same(report.ratio, other):
                failing[name].append({"function": descriptor, "ratio": (report.ratio, other)})
        if report.ratio is not None and (worst is None or report.ratio > worst):
            worst, worst_name = report.ratio, descriptor
        if len(family) == 1:
            for name, value in report.quantities().items():
                outcome.quantities[name] = value
        for check in verify_pipeline(f, params, spec).checks:
            pipeline.setdefault(check.name, []).append(check)

    outcome.quantity("functions", len(family))
    outcome.quantity("max_ratio", worst)
    outcome.quantity("max_ratio_function", worst_name)
    _record_invariances(outcome, failing, len(family))
    if float(config.q).is_integer():
        bound = metric_cotype_ratio_bound(config.n, int(config.q))
        outcome.quantity("ratio_bound", bound)
        outcome.check("ratio_bound", worst is None or at_most(worst, bound), max_ratio=worst, bound=bound)
    else:
        outcome.skip("ratio_bound", "the frozen bound needs an integer q")

    for name, checks in pipeline.items():
        if all(check.skipped is not None for check in checks):
            outcome.skip(name, checks[0].skipped or "")
            continue
        failing = [(descriptor, check) for (descriptor, _), check in zip(family, checks) if not check.holds]
        outcome.check(
            name,
            not failing,
            functions=len(checks),
            constant=checks[0].constant,
            failing=[{"function": descriptor, **check.detail()} for descriptor, check in failing[:MAX_LISTED_FAILURES]],
        )

    rows = _rademacher_rows(family[0][1])
    if not rows:
        outcome.skip("rademacher_parallelogram", "the first function vanishes")
    else:
        cotype_ratio = rademacher_cotype_ratio(rows, spec, config.scalar_mode)
        outcome.quantity("rademacher_cotype_ratio", cotype_ratio)
        if config.p_value == 2 and config.q_value == 2:
            type_ratio = rademacher_type_ratio(rows, 2, spec, config.scalar_mode)
            outcome.check(
                "rademacher_parallelogram",
                _same(cotype_ratio, 1) and _same(type_ratio, 1),
                cotype_ratio=cotype_ratio,
                type_ratio=type_ratio,
            )
        else:
            outcome.skip("rademacher_parallelogram", "the parallelogram law holds in l_2 with q=2 only")
    return outcome


# scheme


def _max_defined(values: List[Optional[Scalar]]) -> Optional[Scalar]:
    defined = [v for v in values if v is not None]
    return max(defined) if defined else None


def scheme_suite(config: RunConfig) -> SuiteOutcome:
    """A^q and S^q of the S(j,k) scheme over a family, with their invariances."""
    outcome = SuiteOutcome()
    params = config.scheme_params()
    spec = config.norm_spec
    family = _family(config, outcome)
    kernels = scheme_kernels(params)

    constants: List[SchemeConstants] = [scheme_constants(params, f, spec, kernels) for _, f in family]
    outcome.quantity("functions", len(family))
    outcome.quantity("max_A_q", _max_defined([c.A_q for c in constants]))
    outcome.quantity("max_S_q", _max_defined([c.S_q for c in constants]))
    if len(family) == 1:
        for name, value in constants[0].quantities().items():
            outcome.quantities[name] = value

    failing: Dict[str, List[Dict[str, object]]] = OrderedDict((name, []) for name in INVARIANCES)
    for (descriptor, f), base in zip(family, constants):
        for name, g in _invariance_variants(f).items():
            other = scheme_constants(params, g, spec, kernels)
            if not (_same(base.A_q, other.A_q) and _same(base.S_q, other.S_q)):
                failing[name].append(
                    {"function": descriptor, "A_q": (base.A_q, other.A_q), "S_q": (base.S_q, other.S_q)}
                )
    _record_invariances(outcome, failing, len(family))
    return outcome


# lower bounds


def _window_holds(value: Fraction, n: int, k: int) -> Dict[str, bool]:
    """c min(sqrt(np), np) <= value <= C min(sqrt(np), np) compared without square roots."""
    low, high = ABS_SUM_WINDOW
    np_ = Fraction(2 * n, k + 1)
    if np_ >= 1:
        return {"lower": value * value >= low * low * np_, "upper": value * value <= high * high * np_}
    return {"lower": value >= low * np_, "upper": value <= high * np_}


def lower_bounds_suite(config: RunConfig) -> SuiteOutcome:
    """Jigsaw witness, approximation growth, marginals, delta smoothing and the lattice walk law."""
    outcome = SuiteOutcome()
    params = config.scheme_params()
    n, k = params.n, params.k

    s = config.jigsaw_s
    period = range(-6 * s, 6 * s)
    outcome.check("jigsaw_lipschitz", lipschitz_violations(s, period) == 0, s=s)
    outcome.check("jigsaw_periodic", all(jigsaw(t + 12 * s, s) == jigsaw(t, s) for t in period), s=s)
    outcome.check(
        "jigsaw_profile",
        all(jigsaw(t, s) == 0 for t in range(-s, s + 1)) and jigsaw(6 * s, s) == s,
        s=s,
    )

    growth = approximation_growth()
    slow = []
    for growth_k, by_s in growth.items():
        for growth_s, value in by_s.items():
            outcome.quantity(f"approximation_growth/k={growth_k}/s={growth_s}", value)
        best = _max_defined(list(by_s.values()))
        if best is None or best < APPROXIMATION_GROWTH_C * growth_k:
            slow.append(growth_k)
    outcome.check("approximation_growth", not slow, c=APPROXIMATION_GROWTH_C, below=slow)

    kernels = scheme_kernels(params)
    variation = marginal_variation(kernels)
    outcome.quantity("marginal_variation", variation)
    outcome.check("marginal_variation", variation == Fraction(2, k), value=variation, expected=Fraction(2, k))
    tail_s = max((t for t in range(1, k // 2 + 1) if t % 2), default=None)
    if tail_s is None:
        outcome.skip("tail_mass", f"no odd s <= k/2 for k={k}")
    else:
        mass = tail_mass(kernels, tail_s)
        outcome.quantity("tail_mass", mass)
        outcome.check("tail_mass", mass >= Fraction(1, 2), s=tail_s, value=mass)

    if not float(config.q).is_integer():
        outcome.skip("delta_smoothing", "the delta witness needs an integer q")
    elif config.m**n * 2**n > config.budget:
        outcome.skip("delta_smoothing", f"m^n 2^n exceeds the budget of {config.budget}")
    else:
        delta = delta_smoothing_value(params, budget=config.budget)
        for name, value in delta.quantities().items():
            outcome.quantity(f"delta_smoothing/{name}", value)
        outcome.check("delta_smoothing", delta.chain_holds, q=delta.q)

    mean = expected_abs_sum(n, k)
    outcome.quantity("expected_abs_sum", mean)
    second, fourth = moments(n, k)
    closed_second, closed_fourth = closed_form_moments(n, k)
    outcome.quantity("second_moment", second)
    outcome.quantity("fourth_moment", fourth)
    outcome.check("second_moment", second == closed_second, value=second, closed_form=closed_second)
    outcome.check("fourth_moment", fourth == closed_fourth, value=fourth, closed_form=closed_fourth)
    window = _window_holds(mean, n, k)
    outcome.check("abs_sum_window", all(window.values()), window=ABS_SUM_WINDOW, **window)
    if (k + 1) ** n > config.budget:
        outcome.skip("odd_box_abs_sum", f"(k+1)^n exceeds the budget of {config.budget}")
    else:
        sums = odd_box_abs_sum(n, k)
        outcome.quantity("odd_box_abs_sum/uniform", sums["uniform"])
        outcome.quantity("odd_box_abs_sum/box", sums["box"])
        outcome.check("odd_box_abs_sum", sums["uniform"] == mean, uniform=sums["uniform"], expected=mean)
    if 3**n > config.budget:
        outcome.skip("brute_force_abs_sum", f"3^n exceeds the budget of {config.budget}")
    else:
        outcome.check("brute_force_abs_sum", brute_force_abs_sum(n, k) == mean, expected=mean)
    return outcome


# symmetrize


def symmetrize_suite(config: RunConfig) -> SuiteOutcome:
    """Symmetrized random kernel families: covariance, marginals and the permutation identities."""
    outcome = SuiteOutcome()
    params = config.scheme_params()
    spec = config.norm_spec
    n, m = params.n, params.m
    rng = np.random.default_rng([config.seed if config.seed is not None else 0, n, m])
    first, second = beta1(params), beta2(params)

    failures: Dict[str, List[int]] = OrderedDict(
        (name, [])
        for name in (
            "transposition_covariant",
            "marginals_agree",
            "conv_perm",
            "norm_identity",
            "energy_identity",
            "symmetrized_approximation",
        )
    )
    for index in range(config.functions):
        kernels = random_kernel_family(m, n, rng)
        scheme = symmetrize(kernels, first, second)
        f = TorusFunction.random_integer(m, n, config.d, config.radius, rng, config.scalar_mode)
        pi = tuple(int(c) for c in rng.permutation(n))
        left, right = symmetrized_approximation(f, kernels, spec)
        outcomes = {
            "transposition_covariant": transposition_covariant(scheme.kernels),
            "marginals_agree": marginals_agree(scheme.kernels),
            "conv_perm": conv_perm_holds(f, kernels[0], pi),
            "norm_identity": norm_identity_holds(f, kernels[0], pi, spec),
            "energy_identity": energy_identity_holds(f, first, spec) and energy_identity_holds(f, second, spec),
            "symmetrized_approximation": at_most(left, right),
        }
        for name, ok in outcomes.items():
            if not ok:
                failures[name].append(index)
    for name, failing in failures.items():
        outcome.check(name, not failing, families=config.functions, failing=failing[:MAX_LISTED_FAILURES])

    fixed = scheme_kernels(params)
    outcome.check("scheme_fixed_point", symmetrize_kernels(fixed) == tuple(fixed), n=n, k=params.k)
    outcome.quantity("families", config.functions)
    return outcome


registry.register("bernoulli", bernoulli_suite, "Bivariate Bernoulli table and its golden CSV")
registry.register("identities", identities_suite, "Exact indicator, expansion and weighted-sum identities")
registry.register("cotype", cotype_suite, "Metric cotype ratios and the pipeline inequalities")
registry.register("scheme", scheme_suite, "Approximation and smoothing constants of the S(j,k) scheme")
registry.register("lower-bounds", lower_bounds_suite, "Jigsaw witness, marginals and the lattice walk law")
registry.register("symmetrize", symmetrize_suite, "Symmetrization over coordinate permutations")
