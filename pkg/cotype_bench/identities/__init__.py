"""Signed indicator sums, counting functionals and their exact verification sweeps."""

from cotype_bench.identities.counting import KCounts, k_counts, k_counts_signed
from cotype_bench.identities.indicators import a_bruteforce, a_table, b_bruteforce, b_closed_form, b_table
from cotype_bench.identities.verification import (
    SweepBudget,
    VerificationReport,
    h_coeff,
    verify_expansion,
    verify_indicator_sweep,
    verify_vanishing,
    verify_weighted_sums,
)

__all__ = [
    "KCounts",
    "SweepBudget",
    "VerificationReport",
    "a_bruteforce",
    "a_table",
    "b_bruteforce",
    "b_closed_form",
    "b_table",
    "h_coeff",
    "k_counts",
    "k_counts_signed",
    "verify_expansion",
    "verify_indicator_sweep",
    "verify_vanishing",
    "verify_weighted_sums",
]
