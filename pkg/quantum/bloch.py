"""
量子比特与 Bloch 向量之间的映射

约定: |ψ⟩ = (a, b) 对应 v = (2 Re(a* b), 2 Im(a* b), |a|² − |b|²)，
于是 |0⟩ → +z，|+⟩ → +x，(|0⟩ + i|1⟩)/√2 → +y。
"""

import math
from typing import Sequence

import numpy as np

from config.settings import settings
from .exceptions import DimensionMismatchError, StructuralError
from .states import BlochVector, PureState


def bloch_from_qubit(psi: PureState) -> BlochVector:
    if psi.dim != 2:
        raise DimensionMismatchError(f"Bloch 映射只适用于量子比特，实际维数 {psi.dim}")
    a, b = psi.amplitudes
    cross = np.conj(a) * b
    v = np.array([2.0 * cross.real, 2.0 * cross.imag, abs(a) ** 2 - abs(b) ** 2])
    # 仅消除舍入造成的超出
    norm = float(np.linalg.norm(v))
    if norm > 1.0:
        v = v / norm
    return BlochVector.from_array(v)


def qubit_from_bloch(v: BlochVector) -> PureState:
    if not v.is_unit(settings.TOLERANCES.BLOCH_NORM):
        raise StructuralError(f"逆映射要求单位 Bloch 向量，实际模长 {v.norm!r}")
    arr = v.as_array() / v.norm
    theta = math.acos(max(-1.0, min(1.0, arr[2])))
    phi = math.atan2(arr[1], arr[0])
    amps = np.array([math.cos(theta / 2.0), np.exp(1j * phi) * math.sin(theta / 2.0)])
    return PureState(amps)


def bloch_matrix(vectors: Sequence[BlochVector]) -> np.ndarray:
    """按行排列的 n×3 数组"""
    return np.array([v.as_array() for v in vectors], dtype=float).reshape(-1, 3)


def bloch_angle(a: PureState, b: PureState) -> float:
    """两量子比特 Bloch 向量的夹角"""
    return bloch_from_qubit(a).angle(bloch_from_qubit(b))
