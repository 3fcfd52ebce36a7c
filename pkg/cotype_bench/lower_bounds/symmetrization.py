"""
Averaging a smoothing and approximation scheme over coordinate permutations.

    bar nu_j = (1/n!) sum_pi nu_{pi(j)}^(pi^-1)
    bar beta = (1/n!) sum_pi beta^pi

with nu^pi(x) = nu(x^pi) and beta^pi(x, y) = beta(x^pi, y^pi).
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from cotype_bench.errors import BudgetExceededError, DomainMismatchError
from cotype_bench.kernels.edges import EdgeMeasure, edge_energy, edge_offsets
from cotype_bench.kernels.kernel import Kernel, average_kernels, convolve
from cotype_bench.lower_bounds.marginals import marginal
from cotype_bench.metrics.scheme import approximation_numerator
from cotype_bench.torus.functions import NormSpec, TorusFunction
from cotype_bench.torus.measures import table_mean
from cotype_bench.torus.points import inverse_permutation, permute_coords, transposition

logger = logging.getLogger(__name__)

MAX_SYMMETRIZE_N = 8


def _permutations(n: int) -> List[Tuple[int, ...]]:
    if n > MAX_SYMMETRIZE_N:
        raise BudgetExceededError(f"{n}! permutations exceed the budget (n <= {MAX_SYMMETRIZE_N})")
    return list(itertools.permutations(range(n)))


def symmetrize_kernels(kernels: Sequence[Kernel]) -> Tuple[Kernel, ...]:
    n = len(kernels)
    if any(nu.n != n for nu in kernels):
        raise DomainMismatchError("a scheme on Z_m^n needs n kernels on Z_m^n")
    perms = _permutations(n)
    return tuple(
        average_kernels([kernels[pi[j]].permute(inverse_permutation(pi)) for pi in perms]) for j in range(n)
    )


def symmetrize_measure(beta: EdgeMeasure) -> EdgeMeasure:
    perms = _permutations(beta.n)
    table: Dict[Tuple[int, ...], Fraction] = {
        delta: sum((beta.offset_weight(permute_coords(delta, pi)) for pi in perms), Fraction(0)) / len(perms)
        for delta in edge_offsets(beta.n)
    }
    return EdgeMeasure(beta.m, beta.n, f"bar {beta.name}", table.__getitem__, beta.normalizer)


@dataclass(frozen=True)
class SymmetrizedScheme:
    kernels: Tuple[Kernel, ...]
    first: EdgeMeasure
    second: EdgeMeasure


def symmetrize(kernels: Sequence[Kernel], first: EdgeMeasure, second: EdgeMeasure) -> SymmetrizedScheme:
    scheme = SymmetrizedScheme(symmetrize_kernels(kernels), symmetrize_measure(first), symmetrize_measure(second))
    logger.debug("symmetrized a scheme with n=%d over %d permutations", len(kernels), math.factorial(len(kernels)))
    return scheme


def transposition_covariant(kernels: Sequence[Kernel]) -> bool:
    """bar nu_j == bar nu_h^(j h) for every pair j < h."""
    n = len(kernels)
    return all(
        kernels[j] == kernels[h].permute(transposition(j, h, n)) for j in range(n) for h in range(j + 1, n)
    )


def marginals_agree(kernels: Sequence[Kernel]) -> bool:
    """P_j(bar nu_i) == P_h(bar nu_i) whenever j, h != i."""
    n = len(kernels)
    for i, nu in enumerate(kernels):
        others = [marginal(nu, j) for j in range(n) if j != i]
        if any(other != others[0] for other in others[1:]):
            return False
    return True


def conv_perm_holds(f: TorusFunction, nu: Kernel, pi: Sequence[int]) -> bool:
    """f * nu^pi == (f^(pi^-1) * nu)^pi."""
    left = convolve(f, nu.permute(pi))
    right = convolve(f.permute(inverse_permutation(pi)), nu).permute(pi)
    return left.equals(right)


def norm_identity_holds(f: TorusFunction, nu: Kernel, pi: Sequence[int], spec: NormSpec) -> bool:
    """E_x ||f * nu^pi - f||^q == E_x ||f^(pi^-1) * nu - f^(pi^-1)||^q."""
    g = f.permute(inverse_permutation(pi))
    left = table_mean((convolve(f, nu.permute(pi)) - f).norm_power_table(spec))
    right = table_mean((convolve(g, nu) - g).norm_power_table(spec))
    return _same(left, right)


def energy_identity_holds(f: TorusFunction, beta: EdgeMeasure, spec: NormSpec) -> bool:
    """energy(f, bar beta) == (1/n!) sum_pi energy(f^(pi^-1), beta)."""
    perms = _permutations(f.n)
    left = edge_energy(f, symmetrize_measure(beta), spec)
    terms = [edge_energy(f.permute(inverse_permutation(pi)), beta, spec) for pi in perms]
    return _same(left, sum(terms[1:], terms[0]) / len(perms))


def symmetrized_approximation(
    f: TorusFunction, kernels: Sequence[Kernel], spec: NormSpec
) -> Tuple[object, object]:
    """(A-numerator of the symmetrized kernels, pi-average of A-numerators of f^pi); the first never exceeds the second."""
    perms = _permutations(f.n)
    left = approximation_numerator(f, symmetrize_kernels(kernels), spec)
    terms = [approximation_numerator(f.permute(pi), kernels, spec) for pi in perms]
    return left, sum(terms[1:], terms[0]) / len(perms)


def _same(left, right) -> bool:
    if isinstance(left, float) or isinstance(right, float):
        return bool(np.isclose(float(left), float(right), rtol=1e-9, atol=1e-9))
    return left == right


def random_kernel(m: int, n: int, rng: np.random.Generator, support: int = 4) -> Kernel:
    """A kernel with `support` random points and integer weights in [1, 5], normalized."""
    points = {tuple(int(c) for c in rng.integers(0, m, size=n)) for _ in range(support)}
    raw = {p: int(rng.integers(1, 6)) for p in sorted(points)}
    total = sum(raw.values())
    return Kernel(m, n, {p: Fraction(w, total) for p, w in raw.items()})


def random_kernel_family(m: int, n: int, rng: np.random.Generator, support: int = 4) -> List[Kernel]:
    return [random_kernel(m, n, rng, support) for _ in range(n)]
