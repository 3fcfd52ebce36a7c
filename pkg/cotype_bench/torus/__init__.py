"""Discrete torus primitives."""

from cotype_bench.torus.functions import (
    FLOAT_TOLERANCE,
    NormSpec,
    ScalarMode,
    TorusFunction,
    format_scalar,
    norm_q_power,
    permute_fn,
)
from cotype_bench.torus.measures import Domain, mean_over, table_mean
from cotype_bench.torus.points import (
    SignAlphabet,
    SignVector,
    TorusPoint,
    add_points,
    inner_sign,
    odot,
    permute,
    signed_rep,
    torus_abs,
)

__all__ = [
    "FLOAT_TOLERANCE",
    "Domain",
    "NormSpec",
    "ScalarMode",
    "SignAlphabet",
    "SignVector",
    "TorusFunction",
    "TorusPoint",
    "add_points",
    "format_scalar",
    "inner_sign",
    "mean_over",
    "norm_q_power",
    "odot",
    "permute",
    "permute_fn",
    "signed_rep",
    "table_mean",
    "torus_abs",
]
