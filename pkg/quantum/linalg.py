"""
厄米矩阵的谱运算

本征分解是唯一需要的谱原语，矩阵绝对值、平方根倒数等都经由它计算。
"""

from typing import Callable

import numpy as np


def hermitize(matrix: np.ndarray) -> np.ndarray:
    """返回 (A + A†)/2"""
    m = np.asarray(matrix, dtype=complex)
    return 0.5 * (m + m.conj().T)


def hermitian_deviation(matrix: np.ndarray) -> float:
    """与共轭转置的最大逐元素偏差"""
    m = np.asarray(matrix, dtype=complex)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def eigvalsh(matrix: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(hermitize(matrix))


def min_eigenvalue(matrix: np.ndarray) -> float:
    return float(eigvalsh(matrix)[0])


def max_eigenvalue(matrix: np.ndarray) -> float:
    return float(eigvalsh(matrix)[-1])


def hermitian_apply(matrix: np.ndarray, fn: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """对厄米矩阵的本征值逐个作用 fn"""
    values, vectors = np.linalg.eigh(hermitize(matrix))
    return hermitize((vectors * fn(values)) @ vectors.conj().T)


def psd_clip(matrix: np.ndarray) -> np.ndarray:
    """把负本征值截断为 0"""
    return hermitian_apply(matrix, lambda w: np.clip(w, 0.0, None))


def inverse_sqrt(matrix: np.ndarray) -> np.ndarray:
    """正定矩阵的 A^{-1/2}"""
    values = eigvalsh(matrix)
    if values[0] <= 0.0:
        raise np.linalg.LinAlgError("matrix is not positive definite")
    return hermitian_apply(matrix, lambda w: 1.0 / np.sqrt(w))


def trace_norm(matrix: np.ndarray) -> float:
    """厄米矩阵的迹范数 Tr|A|"""
    return float(np.sum(np.abs(eigvalsh(matrix))))
