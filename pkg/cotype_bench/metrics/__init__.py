"""Rademacher and metric cotype ratios, scheme constants and the inequalities linking them."""

from cotype_bench.metrics.cotype import CotypeReport, metric_cotype_ratio
from cotype_bench.metrics.pipeline import InequalityCheck, PipelineReport, verify_pipeline
from cotype_bench.metrics.rademacher import rademacher_average, rademacher_cotype_ratio, rademacher_type_ratio
from cotype_bench.metrics.scheme import (
    SchemeConstants,
    approximation_numerator,
    scheme_constants,
    smoothing_numerator,
)

__all__ = [
    "CotypeReport",
    "InequalityCheck",
    "PipelineReport",
    "SchemeConstants",
    "approximation_numerator",
    "metric_cotype_ratio",
    "rademacher_average",
    "rademacher_cotype_ratio",
    "rademacher_type_ratio",
    "scheme_constants",
    "smoothing_numerator",
    "verify_pipeline",
]
