"""
Exact verification sweeps for the indicator sums and the identities built on them.

Every sweep returns a VerificationReport. Domains no larger than the budget
are enumerated exhaustively; larger ones are sampled with a fixed seed unless
sampling is disabled, in which case BudgetExceededError is raised.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from cotype_bench.bernoulli import BernoulliTable
from cotype_bench.errors import BudgetExceededError, PreconditionError
from cotype_bench.identities.counting import k_counts, k_counts_signed
from cotype_bench.identities.indicators import (
    a_bruteforce,
    a_table,
    admissible_terms,
    b_bruteforce,
    b_closed_form,
    b_table,
    in_odd_box_point,
)
from cotype_bench.kernels.operators import Delta_B, E_j
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.kernels.point_sets import in_odd_box, iter_odd_box
from cotype_bench.torus.functions import TorusFunction, format_scalar, require_exact_function
from cotype_bench.torus.points import SignVector, TorusPoint, full_signs, torus_points

logger = logging.getLogger(__name__)

MAX_LISTED_FAILURES = 20


class VerificationReport(BaseModel):
    """Outcome of one identity sweep."""

    identity: str
    domain: Dict[str, Any] = Field(default_factory=dict)
    checked: int = 0
    failures: List[Dict[str, Any]] = Field(default_factory=list)
    failure_count: int = 0
    mode: str = "exhaustive"
    max_deviation: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record_failure(self, detail: Dict[str, Any]) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_LISTED_FAILURES:
            self.failures.append(detail)
        if self.failure_count == 1:
            logger.warning("%s: counterexample %s", self.identity, detail)


@dataclass(frozen=True)
class SweepBudget:
    """
    Size limits for exhaustive sweeps.

    Attributes:
        max_tuples: Largest domain enumerated exhaustively
        samples: Number of sampled tuples beyond the limit
        seed: Seed of the sampling generator
        allow_sampling: Raise instead of sampling when False
    """

    max_tuples: int = 10**6
    samples: int = 10_000
    seed: int = 0
    allow_sampling: bool = True

    def mode_for(self, work: int, identity: str) -> str:
        if work <= self.max_tuples:
            return "exhaustive"
        if not self.allow_sampling:
            raise BudgetExceededError(f"{identity}: {work} tuples exceed the budget of {self.max_tuples}")
        logger.info("%s: %d tuples exceed the budget, sampling %d with seed %d", identity, work, self.samples, self.seed)
        return f"sampled({self.seed})"

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def _domain(params: SchemeParams) -> Dict[str, Any]:
    return {"n": params.n, "m": params.m, "k": params.k}


def _random_signs(rng: np.random.Generator, n: int) -> SignVector:
    return SignVector(tuple(int(s) for s in rng.choice((-1, 1), size=n)))


def _odd_box_points(params: SchemeParams) -> Iterator[TorusPoint]:
    for signed in iter_odd_box(params):
        yield TorusPoint.of(signed, params.m)


def _torus_pairs(params: SchemeParams, budget: SweepBudget, mode: str) -> Iterator[Tuple[TorusPoint, SignVector]]:
    if mode == "exhaustive":
        for z in torus_points(params.m, params.n):
            for eps in full_signs(params.n):
                yield z, eps
        return
    rng = budget.rng()
    for _ in range(budget.samples):
        z = TorusPoint.of(rng.integers(0, params.m, size=params.n).tolist(), params.m)
        yield z, _random_signs(rng, params.n)


def _odd_box_pairs(params: SchemeParams, budget: SweepBudget, mode: str) -> Iterator[Tuple[TorusPoint, SignVector]]:
    if mode == "exhaustive":
        for z in _odd_box_points(params):
            for eps in full_signs(params.n):
                yield z, eps
        return
    rng = budget.rng()
    odd = params.odd_offsets()
    for _ in range(budget.samples):
        z = TorusPoint.of([odd[i] for i in rng.integers(0, len(odd), size=params.n)], params.m)
        yield z, _random_signs(rng, params.n)


def h_coeff(alpha: int, beta: int, table: BernoulliTable) -> Fraction:
    """h_{alpha,beta} = B_{alpha-beta,beta}."""
    if not 0 <= beta <= alpha:
        raise PreconditionError(f"need 0 <= beta <= alpha, got alpha={alpha}, beta={beta}")
    return table[alpha - beta, beta]


def verify_indicator_sweep(params: SchemeParams, budget: SweepBudget = SweepBudget()) -> VerificationReport:
    """Compare b_bruteforce with the closed form or zero, and a_bruteforce with pMmk, on all of Z_m^n."""
    n = params.n
    work = params.m**n * 2**n
    mode = budget.mode_for(work, "indicator_sweep")
    report = VerificationReport(identity="indicator_sweep", domain=_domain(params), mode=mode)
    for z, eps in _torus_pairs(params, budget, mode):
        in_box = in_odd_box_point(z, params)
        pmk = k_counts(z, params).pmk
        for i in range(n + 1):
            for j in range(i + 1):
                value = b_bruteforce(z, eps, i, j, params)
                expected = b_closed_form(z, eps, i, j, params) if in_box and i < pmk else 0
                report.checked += 1
                if value != expected:
                    report.record_failure(
                        {"z": list(z.signed()), "eps": list(eps), "i": i, "j": j, "b": value, "expected": expected}
                    )
        a_value = a_bruteforce(z, eps, params)
        a_expected = k_counts_signed(z, eps, params).pMmk if in_box else 0
        report.checked += 1
        if a_value != a_expected:
            report.record_failure({"z": list(z.signed()), "eps": list(eps), "a": a_value, "expected": a_expected})
    logger.info("indicator_sweep %s: %d checks, %d failures", report.domain, report.checked, report.failure_count)
    return report


def verify_vanishing(params: SchemeParams, budget: SweepBudget = SweepBudget()) -> VerificationReport:
    """b_{i,j}(z, eps) = 0 for z in the all-odd box whenever i >= pmk(z)."""
    n = params.n
    work = params.odd_box_size * 2**n * n * n
    mode = budget.mode_for(work, "vanishing")
    report = VerificationReport(identity="vanishing", domain=_domain(params), mode=mode)
    for z, eps in _odd_box_pairs(params, budget, mode):
        pmk = k_counts(z, params).pmk
        for i in range(pmk, n + 1):
            for j in range(i + 1):
                value = b_bruteforce(z, eps, i, j, params)
                report.checked += 1
                if value != 0:
                    report.record_failure({"z": list(z.signed()), "eps": list(eps), "i": i, "j": j, "b": value})
    return report


def verify_expansion(
    params: SchemeParams, table: BernoulliTable, budget: SweepBudget = SweepBudget()
) -> VerificationReport:
    """pMmk(y ⊙ eps) = sum_{alpha<=n} sum_{beta<=alpha} h_{alpha,beta} b_{alpha,beta}(y, eps) on the all-odd box."""
    n = params.n
    if table.N < n:
        raise PreconditionError(f"Bernoulli table has N={table.N}, the expansion needs N >= {n}")
    mode = budget.mode_for(params.odd_box_size * 2**n, "expansion")
    report = VerificationReport(identity="expansion", domain=_domain(params), mode=mode)
    worst = Fraction(0)
    for y, eps in _odd_box_pairs(params, budget, mode):
        lhs = k_counts_signed(y, eps, params).pMmk
        rhs = sum(
            (h_coeff(alpha, beta, table) * b_bruteforce(y, eps, alpha, beta, params)
             for alpha in range(n + 1) for beta in range(alpha + 1)),
            Fraction(0),
        )
        report.checked += 1
        deviation = abs(lhs - rhs)
        worst = max(worst, deviation)
        if deviation:
            report.record_failure({"y": list(y.signed()), "eps": list(eps), "lhs": lhs, "rhs": format_scalar(rhs)})
    report.max_deviation = format_scalar(worst)
    return report


def _correlate(f: TorusFunction, table: np.ndarray, m: int) -> TorusFunction:
    """x -> sum_z table[z] f(x + z)."""
    out = f.scale(0)
    for index in np.argwhere(table != 0):
        z = tuple(int(c) for c in index)
        out = out + f.translate(z).scale(int(table[z]))
    return out


def _support_in_odd_box(table: np.ndarray, params: SchemeParams) -> bool:
    return all(
        in_odd_box(TorusPoint(tuple(int(c) for c in idx), params.m).signed(), params.k)
        for idx in np.argwhere(table != 0)
    )


def verify_weighted_sums(f: TorusFunction, params: SchemeParams) -> List[VerificationReport]:
    """Check the weighted-sum identities for every x and every eps, exactly.

    Reports, in order: b_identity, a_identity, odd_box_restriction, with_cardinality.
    """
    require_exact_function(f)
    n, k = params.n, params.k
    if (f.m, f.n) != (params.m, params.n):
        raise PreconditionError("function and parameters disagree on (n, m)")
    points = f.m**n
    domain = _domain(params)
    b_report = VerificationReport(identity="b_identity", domain=domain)
    a_report = VerificationReport(identity="a_identity", domain=domain)
    restriction = VerificationReport(identity="odd_box_restriction", domain=domain)
    cardinality = VerificationReport(identity="with_cardinality", domain=domain)

    deltas = {
        subset: Delta_B(f, params, subset)
        for size in range(n + 1)
        for subset in itertools.combinations(range(n), size)
    }
    averages = [E_j(f, params, j) for j in range(n)]
    odd_box = [tuple(y) for y in iter_odd_box(params)]

    for eps in full_signs(n):
        for i in range(n + 1):
            for j in range(i + 1):
                table = b_table(eps, i, j, params)
                lhs = _correlate(f, table, f.m)
                rhs = f.scale(0)
                for subset, delta in admissible_terms(eps, i, j):
                    rest = tuple(t for t in range(n) if t not in subset)
                    fixed = dict(zip(subset, delta))
                    plus = [fixed[t] * k if t in fixed else eps[t] for t in range(n)]
                    minus = [fixed[t] * k if t in fixed else -eps[t] for t in range(n)]
                    rhs = rhs + deltas[rest].translate(plus) - deltas[rest].translate(minus)
                rhs = rhs.scale(k ** (n - i))
                b_report.checked += points
                bad = lhs.mismatches(rhs)
                if bad:
                    b_report.record_failure({"eps": list(eps), "i": i, "j": j, "points": bad})
                restriction.checked += 1
                if not _support_in_odd_box(table, params):
                    restriction.record_failure({"eps": list(eps), "i": i, "j": j})

        table = a_table(eps, params)
        restriction.checked += 1
        if not _support_in_odd_box(table, params):
            restriction.record_failure({"eps": list(eps), "a": True})
        lhs = _correlate(f, table, f.m)
        smoothed = f.scale(0)
        for j in range(n):
            unit = [1 if t == j else 0 for t in range(n)]
            step = averages[j].translate(unit) - averages[j].translate([-c for c in unit])
            smoothed = smoothed + step.scale(eps[j])
        a_report.checked += points
        bad = lhs.mismatches(smoothed.scale(params.box_size))
        if bad:
            a_report.record_failure({"eps": list(eps), "points": bad})

        weighted = f.scale(0)
        for y in odd_box:
            weight = k_counts_signed(y, eps, params).pMmk
            if weight:
                weighted = weighted + f.translate(y).scale(weight)
        cardinality.checked += points
        bad = smoothed.mismatches(weighted.scale(Fraction(1, params.box_size)))
        if bad:
            cardinality.record_failure({"eps": list(eps), "points": bad})

    return [b_report, a_report, restriction, cardinality]
