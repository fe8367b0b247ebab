"""
Kochen-Specker 量子比特模型
球面采样、认知态密度、Monte Carlo 重叠积分与闭式结果
"""

from .sampling import SamplingScheme, SphereSample, sphere_sample
from .model import (
    KsIntegrator,
    MonteCarloEstimate,
    Theorem6Minimum,
    hemisphere_positivity,
    ks_density,
    ks_overlap_bases_closed,
    ks_overlap_mixed,
    ks_overlap_pair_closed,
    ks_overlap_pure,
    maximally_mixed_qubit_set,
    theorem6_coefficients,
    theorem6_minimize,
    theorem6_overlap,
)

__all__ = [
    "SamplingScheme",
    "SphereSample",
    "sphere_sample",
    "KsIntegrator",
    "MonteCarloEstimate",
    "Theorem6Minimum",
    "hemisphere_positivity",
    "ks_density",
    "ks_overlap_bases_closed",
    "ks_overlap_mixed",
    "ks_overlap_pair_closed",
    "ks_overlap_pure",
    "maximally_mixed_qubit_set",
    "theorem6_coefficients",
    "theorem6_minimize",
    "theorem6_overlap",
]
