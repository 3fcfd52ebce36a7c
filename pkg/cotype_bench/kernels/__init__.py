"""Convolution kernels, averaging operators and edge measures of the S(j,k) scheme."""

from cotype_bench.kernels.edges import EdgeMeasure, beta1, beta2, beta2_normalizer, beta3, edge_energy
from cotype_bench.kernels.kernel import Kernel, average_kernels, convolve
from cotype_bench.kernels.operators import Delta_B, E_j, l_b_kernel, s_jk_kernel, scheme_kernels
from cotype_bench.kernels.params import SchemeParams
from cotype_bench.kernels.point_sets import build_L_B, build_odd_box, build_S_jk

__all__ = [
    "Delta_B",
    "E_j",
    "EdgeMeasure",
    "Kernel",
    "SchemeParams",
    "average_kernels",
    "beta1",
    "beta2",
    "beta2_normalizer",
    "beta3",
    "build_L_B",
    "build_S_jk",
    "build_odd_box",
    "convolve",
    "edge_energy",
    "l_b_kernel",
    "s_jk_kernel",
    "scheme_kernels",
]
