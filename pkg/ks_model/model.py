"""
量子比特的 Kochen-Specker 认知模型

本体态 λ 取单位球面，纯态 v 的认知态为 μ(λ|v) = (1/π) max(0, v·λ)。
重叠积分以球面均匀测度的 Monte Carlo 估计给出: 4π·mean(f)，标准误 4π·std(f)/√N。
"""

import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from config.module_config import KS_CONFIG
from config.settings import settings
from geometry.hemisphere import hemisphere_witness
from quantum.bloch import bloch_from_qubit, bloch_matrix
from quantum.exceptions import DimensionMismatchError, DomainError, RangeError, StructuralError
from quantum.measures import overlap_abs
from quantum.states import BlochVector, MixedPreparation, PureState
from .sampling import SphereSample

logger = logging.getLogger(__name__)

_MIXED_TOLERANCE = 1e-10


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Monte Carlo 积分结果"""

    estimate: float
    std_error: float
    samples: int
    seed: int
    scheme: str

    def within(self, value: float, sigmas: float = 3.0) -> bool:
        return abs(self.estimate - value) <= sigmas * self.std_error

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MonteCarloEstimate":
        return cls(
            estimate=float(data["estimate"]),
            std_error=float(data["std_error"]),
            samples=int(data["samples"]),
            seed=int(data["seed"]),
            scheme=str(data["scheme"]),
        )


def _require_qubits(states: Sequence[PureState], what: str = "态") -> None:
    if len(states) == 0:
        raise RangeError(f"{what}列表为空")
    dims = sorted({s.dim for s in states})
    if dims != [2]:
        raise DimensionMismatchError(f"KS 模型只适用于量子比特，{what}维数为 {dims}")


def ks_density(v: BlochVector, lam: Sequence[float]) -> float:
    """μ(λ|v) = (1/π) max(0, v·λ)"""
    lam = np.asarray(lam, dtype=float).reshape(3)
    tol = settings.TOLERANCES.BLOCH_NORM
    if not v.is_unit(tol) or abs(float(np.linalg.norm(lam)) - 1.0) > tol:
        raise StructuralError(f"ks_density 需要单位向量: |v|={v.norm:.12g}, |λ|={np.linalg.norm(lam):.12g}")
    return max(0.0, float(v.as_array() @ lam)) / math.pi


def ks_densities(vectors: np.ndarray, points: np.ndarray) -> np.ndarray:
    """k×3 的 Bloch 向量对 N×3 的样本点，返回 k×N 的密度"""
    return np.maximum(vectors @ points.T, 0.0) / math.pi


def ks_overlap_pair_closed(a: PureState, b: PureState) -> float:
    """两纯态 KS 重叠的闭式 1 − √(1 − |⟨a|b⟩|²) = 1 − sin(θ/2)"""
    _require_qubits((a, b))
    c = overlap_abs(a, b)
    return 1.0 - math.sqrt(max(0.0, 1.0 - c * c))


class KsIntegrator:
    """KS 模型重叠的 Monte Carlo 积分器"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = {**KS_CONFIG, **(config or {})}
        self.logger = logging.getLogger(__name__)

        self.samples = self.config["samples"]
        self.min_samples = self.config["min_samples"]
        self.chunk_size = self.config["chunk_size"]
        self.max_workers = self.config["max_workers"]
        if self.chunk_size < 1 or self.max_workers < 1:
            raise RangeError(f"块大小与线程数必须 ≥ 1，实际 chunk_size={self.chunk_size}, max_workers={self.max_workers}")

        # 统计信息
        self.stats = {
            "integrations": 0,
            "points": 0,
        }

    def sample(self, n: Optional[int] = None, seed: Optional[int] = None, scheme: Any = None) -> SphereSample:
        return SphereSample.generate(
            self.samples if n is None else n,
            self.config["seed"] if seed is None else seed,
            self.config["scheme"] if scheme is None else scheme,
            chunk_size=self.chunk_size,
            max_workers=self.max_workers,
        )

    def integrate(self, integrand: Callable[[np.ndarray], np.ndarray], sample: SphereSample) -> MonteCarloEstimate:
        """4π·mean(f)，按块求值后按顺序拼接"""
        if sample.size < self.min_samples:
            raise RangeError(f"样本数 {sample.size} 少于下限 {self.min_samples}")
        bounds = [(s, min(s + self.chunk_size, sample.size)) for s in range(0, sample.size, self.chunk_size)]

        def evaluate(bound: Tuple[int, int]) -> np.ndarray:
            return integrand(sample.points[bound[0]:bound[1]])

        if self.max_workers > 1 and len(bounds) > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                values: List[np.ndarray] = list(pool.map(evaluate, bounds))
        else:
            values = [evaluate(b) for b in bounds]
        f = np.concatenate(values)

        n = f.size
        estimate = 4.0 * math.pi * float(np.mean(f))
        std_error = 4.0 * math.pi * float(np.std(f, ddof=1)) / math.sqrt(n)
        self.stats["integrations"] += 1
        self.stats["points"] += n
        return MonteCarloEstimate(estimate, std_error, n, sample.seed, sample.scheme.value)

    def normalization(self, v: BlochVector, sample: SphereSample) -> MonteCarloEstimate:
        """∫ μ(λ|v) dλ，理论值 1"""
        vectors = v.as_array().reshape(1, 3)
        return self.integrate(lambda pts: ks_densities(vectors, pts)[0], sample)

    def overlap_pure(self, states: Sequence[PureState], sample: Optional[SphereSample] = None) -> MonteCarloEstimate:
        """∫ min_k μ(λ|v_k) dλ"""
        _require_qubits(states)
        vectors = bloch_matrix([bloch_from_qubit(s) for s in states])
        result = self.integrate(lambda pts: ks_densities(vectors, pts).min(axis=0), sample or self.sample())
        self.logger.debug(f"KS 纯态重叠 (n={len(states)}): {result.estimate:.6g} ± {result.std_error:.2g}")
        return result

    def overlap_mixed(
        self, preps: Sequence[MixedPreparation], sample: Optional[SphereSample] = None
    ) -> MonteCarloEstimate:
        """∫ min_k (1/β_k) Σ_i α_{i|k} μ(λ|ψ_{i|k}) dλ"""
        if len(preps) == 0:
            raise RangeError("制备列表为空")
        for prep in preps:
            _require_qubits(prep.pures, "制备中的纯态")
        components = [
            (bloch_matrix([bloch_from_qubit(p) for p in prep.pures]), np.asarray(prep.alphas, dtype=float) / prep.beta)
            for prep in preps
        ]

        def integrand(pts: np.ndarray) -> np.ndarray:
            mixtures = [weights @ ks_densities(vectors, pts) for vectors, weights in components]
            return np.min(np.vstack(mixtures), axis=0)

        result = self.integrate(integrand, sample or self.sample())
        self.logger.debug(f"KS 混合重叠 (n={len(preps)}): {result.estimate:.6g} ± {result.std_error:.2g}")
        return result


def ks_overlap_pure(states: Sequence[PureState], sample: Optional[SphereSample] = None) -> MonteCarloEstimate:
    return KsIntegrator().overlap_pure(states, sample)


def ks_overlap_mixed(preps: Sequence[MixedPreparation], sample: Optional[SphereSample] = None) -> MonteCarloEstimate:
    return KsIntegrator().overlap_mixed(preps, sample)


def is_orthonormal_qubit_basis(prep: MixedPreparation, tol: float = _MIXED_TOLERANCE) -> bool:
    """两个等权且正交的量子比特纯态"""
    return (
        prep.size == 2 and prep.dim == 2
        and prep.alphas[0] == prep.alphas[1]
        and overlap_abs(prep.pures[0], prep.pures[1]) <= tol
    )


def ks_overlap_bases_closed(prep1: MixedPreparation, prep2: MixedPreparation) -> float:
    """两组正交基构成的最大混合制备: ω_E = ½ Σ_{i,j} ω_E(ψ_{i|1}, ψ_{j|2})"""
    for k, prep in enumerate((prep1, prep2)):
        if not is_orthonormal_qubit_basis(prep):
            raise DomainError(f"第 {k} 个制备不是量子比特正交基的等权混合")
    return 0.5 * sum(ks_overlap_pair_closed(a, b) for a in prep1.pures for b in prep2.pures)


def theorem6_overlap(c1_abs: float, c1p_abs: float) -> float:
    """2 − ½(√(1−|c1|²) + |c1| + √(1−|c1′|²) + |c1′|)"""
    for name, c in (("|c1|", c1_abs), ("|c1′|", c1p_abs)):
        if not (0.0 <= c <= 1.0):
            raise RangeError(f"{name} 必须在 [0, 1] 内，实际 {c!r}")
    return 2.0 - 0.5 * (math.sqrt(1.0 - c1_abs ** 2) + c1_abs + math.sqrt(1.0 - c1p_abs ** 2) + c1p_abs)


def theorem6_coefficients(prep1: MixedPreparation, prep2: MixedPreparation) -> Tuple[float, float]:
    """第一组基向量在第二组基下的展开系数模 |c1|、|c1′|"""
    for k, prep in enumerate((prep1, prep2)):
        if not is_orthonormal_qubit_basis(prep):
            raise DomainError(f"第 {k} 个制备不是量子比特正交基的等权混合")
    first = prep2.pures[0]
    return overlap_abs(prep1.pures[0], first), overlap_abs(prep1.pures[1], first)


@dataclass(frozen=True)
class Theorem6Minimum:
    value: float
    c1_abs: float
    c1p_abs: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def theorem6_minimize(grid_step: float = 1e-4, refine: bool = True) -> Theorem6Minimum:
    """
    在 [0,1]² 网格上最小化重叠，两个变量可分离，逐维求 √(1−c²) + c 的最大值

    refine 为真时在最优网格点附近用有界标量优化细化。
    """
    if not 0.0 < grid_step <= 0.5:
        raise RangeError(f"网格步长必须在 (0, 0.5] 内，实际 {grid_step!r}")
    grid = np.clip(np.arange(0.0, 1.0 + 0.5 * grid_step, grid_step), 0.0, 1.0)
    gain = np.sqrt(1.0 - grid ** 2) + grid
    best = float(grid[int(np.argmax(gain))])

    if refine:
        lo, hi = max(0.0, best - grid_step), min(1.0, best + grid_step)
        res = minimize_scalar(
            lambda c: -(math.sqrt(max(0.0, 1.0 - c * c)) + c),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-12},
        )
        if res.success:
            best = float(res.x)

    value = theorem6_overlap(best, best)
    logger.debug(f"重叠最小值 {value:.12g}，位于 |c1| = |c1′| = {best:.9f}")
    return Theorem6Minimum(value=value, c1_abs=best, c1p_abs=best)


def hemisphere_positivity(states: Sequence[PureState]) -> bool:
    """
    所有 Bloch 向量位于某个开半球内时 KS 重叠为正

    两个态时等价于 Bloch 夹角 < π。
    """
    _require_qubits(states)
    return hemisphere_witness([bloch_from_qubit(s) for s in states]) is not None


def maximally_mixed_qubit_set(preps: Sequence[MixedPreparation], tol: float = _MIXED_TOLERANCE) -> bool:
    """全部制备都是量子比特且诱导的密度矩阵为 I/2"""
    if len(preps) == 0:
        return False
    half = 0.5 * np.eye(2)
    return all(
        prep.dim == 2 and float(np.max(np.abs(prep.density.entries - half))) <= tol
        for prep in preps
    )
