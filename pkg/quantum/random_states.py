"""
可复现的随机态生成（用于性质测试与命令行演示）
"""

from typing import List, Optional, Tuple

import numpy as np

from .states import DensityMatrix, PureState


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """基于 Philox 计数器的生成器"""
    return np.random.Generator(np.random.Philox(seed))


def random_pure_state(rng: np.random.Generator, dim: int) -> PureState:
    """Haar 随机纯态"""
    z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return PureState(z / np.linalg.norm(z))


def random_unit_vector(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_density_matrix(rng: np.random.Generator, dim: int, rank: Optional[int] = None) -> DensityMatrix:
    """Ginibre 构造的随机混态"""
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(rho / np.trace(rho).real)


def qubit_from_angles(theta: float, phi: float) -> PureState:
    return PureState(np.array([np.cos(theta / 2.0), np.exp(1j * phi) * np.sin(theta / 2.0)]))


def random_great_circle_triple(rng: np.random.Generator) -> Tuple[PureState, PureState, PureState]:
    """三个 Bloch 向量落在同一随机大圆上的量子比特态"""
    u = random_unit_vector(rng)
    w = random_unit_vector(rng)
    w = w - (w @ u) * u
    w = w / np.linalg.norm(w)
    angles = rng.uniform(0.0, 2.0 * np.pi, size=3)
    states: List[PureState] = []
    for t in angles:
        v = np.cos(t) * u + np.sin(t) * w
        theta = np.arccos(np.clip(v[2], -1.0, 1.0))
        phi = np.arctan2(v[1], v[0])
        states.append(qubit_from_angles(theta, phi))
    return states[0], states[1], states[2]
