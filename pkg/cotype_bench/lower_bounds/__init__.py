"""Witnesses and exact computations behind the lower bounds on scheme constants."""

from cotype_bench.lower_bounds.jigsaw import approximation_constant, approximation_growth, jigsaw, jigsaw_vector_fn
from cotype_bench.lower_bounds.marginals import (
    DeltaSmoothingReport,
    MarginalDistribution,
    delta_smoothing_value,
    marginal,
    marginal_variation,
    tail_mass,
)
from cotype_bench.lower_bounds.symmetrization import SymmetrizedScheme, symmetrize
from cotype_bench.lower_bounds.walks import (
    LatticeWalkDistribution,
    expected_abs_sum,
    moments,
    odd_box_abs_sum,
    walk_distribution,
)

__all__ = [
    "DeltaSmoothingReport",
    "LatticeWalkDistribution",
    "MarginalDistribution",
    "SymmetrizedScheme",
    "approximation_constant",
    "approximation_growth",
    "delta_smoothing_value",
    "expected_abs_sum",
    "jigsaw",
    "jigsaw_vector_fn",
    "marginal",
    "marginal_variation",
    "moments",
    "odd_box_abs_sum",
    "symmetrize",
    "tail_mass",
    "walk_distribution",
]
