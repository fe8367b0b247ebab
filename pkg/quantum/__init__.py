"""
量子核心模块
包含纯态、密度矩阵、混合制备、POVM、Bloch 映射与 MUB 构造
"""

from .exceptions import (
    AntidistError,
    CapabilityError,
    ConvergenceError,
    DimensionMismatchError,
    DomainError,
    RangeError,
    StructuralError,
    WitnessUndefinedError,
)
from .states import (
    BlochVector,
    DensityMatrix,
    MixedPreparation,
    Povm,
    PureState,
    as_density_matrices,
    density_from_preparation,
    repair_povm,
)
from .measures import distinguishability, overlap_abs, trace_distance
from .bloch import bloch_angle, bloch_from_qubit, qubit_from_bloch
from .mub import mub_bases, supports_mub_dimension

__all__ = [
    "AntidistError",
    "CapabilityError",
    "ConvergenceError",
    "DimensionMismatchError",
    "DomainError",
    "RangeError",
    "StructuralError",
    "WitnessUndefinedError",
    "BlochVector",
    "DensityMatrix",
    "MixedPreparation",
    "Povm",
    "PureState",
    "as_density_matrices",
    "density_from_preparation",
    "repair_povm",
    "distinguishability",
    "overlap_abs",
    "trace_distance",
    "bloch_angle",
    "bloch_from_qubit",
    "qubit_from_bloch",
    "mub_bases",
    "supports_mub_dimension",
]
