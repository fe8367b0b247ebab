"""
量子态、混合制备与测量的领域类型

所有类型在构造后不可变，numpy 数组被设为只读，可在线程间共享。
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from config.settings import settings
from .exceptions import DimensionMismatchError, StructuralError
from .linalg import hermitian_deviation, hermitize, inverse_sqrt, eigvalsh, psd_clip

logger = logging.getLogger(__name__)

_TOL = settings.TOLERANCES


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=complex, copy=True)
    array.setflags(write=False)
    return array


def _fix_global_phase(amplitudes: np.ndarray) -> np.ndarray:
    """使第一个非零分量为非负实数"""
    nonzero = np.flatnonzero(np.abs(amplitudes) > _TOL.NORM)
    if nonzero.size == 0:
        return amplitudes
    first = amplitudes[nonzero[0]]
    return amplitudes * (abs(first) / first)


@dataclass(frozen=True, eq=False)
class PureState:
    """d 维复单位向量"""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.ndim != 1:
            raise StructuralError(f"纯态振幅必须是一维向量，实际形状 {amps.shape}")
        if amps.shape[0] < 2:
            raise StructuralError(f"纯态维数必须 ≥ 2，实际 {amps.shape[0]}")
        if not np.all(np.isfinite(amps)):
            raise StructuralError("纯态振幅包含非有限数")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > _TOL.NORM:
            raise StructuralError(
                f"纯态未归一化: |ψ| = {norm!r}",
                {"norm": norm, "tolerance": _TOL.NORM},
            )
        object.__setattr__(self, "amplitudes", _frozen(_fix_global_phase(amps / norm)))

    @classmethod
    def from_amplitudes(cls, values: Iterable[complex], normalize: bool = False) -> "PureState":
        amps = np.asarray(list(values), dtype=complex)
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0:
                raise StructuralError("零向量无法归一化")
            amps = amps / norm
        return cls(amps)

    @classmethod
    def basis(cls, dim: int, index: int) -> "PureState":
        """计算基矢 |index⟩"""
        if not 0 <= index < dim:
            raise StructuralError(f"基矢下标 {index} 超出维数 {dim}")
        amps = np.zeros(dim, dtype=complex)
        amps[index] = 1.0
        return cls(amps)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    def inner(self, other: "PureState") -> complex:
        """⟨self|other⟩"""
        if self.dim != other.dim:
            raise DimensionMismatchError(f"维数不一致: {self.dim} vs {other.dim}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def density(self) -> "DensityMatrix":
        return DensityMatrix(self.projector())

    def isclose(self, other: "PureState", tol: float = _TOL.ROUNDTRIP) -> bool:
        return self.dim == other.dim and bool(
            np.allclose(self.amplitudes, other.amplitudes, rtol=0.0, atol=tol)
        )

    def __repr__(self) -> str:
        return f"PureState(dim={self.dim}, amplitudes={np.round(self.amplitudes, 6).tolist()})"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """厄米、半正定、单位迹的 d×d 复矩阵"""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise StructuralError(f"密度矩阵必须是方阵，实际形状 {m.shape}")
        if m.shape[0] < 2:
            raise StructuralError(f"密度矩阵维数必须 ≥ 2，实际 {m.shape[0]}")
        deviation = hermitian_deviation(m)
        if deviation > _TOL.HERMITIAN:
            raise StructuralError("密度矩阵不是厄米的", {"deviation": deviation})
        trace = complex(np.trace(m))
        if abs(trace - 1.0) > _TOL.TRACE:
            raise StructuralError("密度矩阵迹不为 1", {"trace": trace.real})
        m = hermitize(m)
        smallest = float(eigvalsh(m)[0])
        if smallest < -_TOL.DENSITY_EIGEN:
            raise StructuralError("密度矩阵不是半正定的", {"min_eigenvalue": smallest})
        object.__setattr__(self, "entries", _frozen(m))

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=complex) / dim)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        return eigvalsh(self.entries)

    def expectation(self, operator: np.ndarray) -> float:
        """Tr(ρ E) 的实部"""
        return float(np.real(np.trace(self.entries @ operator)))

    def isclose(self, other: "DensityMatrix", tol: float = _TOL.ROUNDTRIP) -> bool:
        return self.dim == other.dim and bool(
            np.allclose(self.entries, other.entries, rtol=0.0, atol=tol)
        )


@dataclass(frozen=True, eq=False)
class MixedPreparation:
    """混合制备的一个具体分解: ρ = (1/β) Σ α_i |ψ_i⟩⟨ψ_i|，α、β 为整数"""

    pures: Tuple[PureState, ...]
    alphas: Tuple[int, ...]
    beta: int
    approximation_error: float = 0.0

    def __post_init__(self):
        pures = tuple(self.pures)
        if len(pures) == 0:
            raise StructuralError("混合制备至少需要一个纯态")
        if len(pures) != len(self.alphas):
            raise StructuralError(
                f"权重与纯态数量不一致: {len(self.alphas)} 个权重, {len(pures)} 个纯态"
            )
        alphas = tuple(self._as_int(a, "alpha") for a in self.alphas)
        beta = self._as_int(self.beta, "beta")
        if any(a < 0 for a in alphas):
            raise StructuralError(f"权重 α 必须非负: {alphas}")
        if beta <= 0:
            raise StructuralError(f"β 必须为正整数: {beta}")
        if sum(alphas) != beta:
            raise StructuralError(f"权重之和 {sum(alphas)} 不等于 β = {beta}")
        dims = {p.dim for p in pures}
        if len(dims) != 1:
            raise DimensionMismatchError(f"混合制备中纯态维数不一致: {sorted(dims)}")
        object.__setattr__(self, "pures", pures)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "beta", beta)

    @staticmethod
    def _as_int(value, name: str) -> int:
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise StructuralError(f"{name} 必须是整数，实际 {value!r}")
        return int(value)

    @classmethod
    def pure(cls, state: PureState) -> "MixedPreparation":
        return cls((state,), (1,), 1)

    @classmethod
    def uniform(cls, pures: Sequence[PureState]) -> "MixedPreparation":
        """等权混合，α 全为 1，β = m"""
        return cls(tuple(pures), (1,) * len(pures), len(pures))

    @classmethod
    def from_weights(
        cls,
        pures: Sequence[PureState],
        weights: Sequence[float],
        max_denominator: int = 10**6,
    ) -> "MixedPreparation":
        """把实数凸权重换成整数 (α, β) 形式，记录最大权重误差"""
        w = np.asarray(weights, dtype=float)
        if w.ndim != 1 or len(w) != len(pures):
            raise StructuralError("权重与纯态数量不一致")
        if np.any(w < 0) or not np.all(np.isfinite(w)) or w.sum() <= 0:
            raise StructuralError(f"权重必须为非负有限数且和为正: {w.tolist()}")
        w = w / w.sum()

        fractions = [Fraction(float(x)).limit_denominator(max_denominator) for x in w]
        beta = math.lcm(*(f.denominator for f in fractions))
        alphas = [int(f * beta) for f in fractions]
        shortfall = beta - sum(alphas)
        if shortfall:
            alphas[int(np.argmax(alphas))] += shortfall

        error = float(np.max(np.abs(np.asarray(alphas) / beta - w)))
        if error > 0:
            logger.warning(f"权重已近似为有理数 (β={beta})，最大误差 {error:.3e}")
        return cls(tuple(pures), tuple(alphas), beta, approximation_error=error)

    @property
    def dim(self) -> int:
        return self.pures[0].dim

    @property
    def size(self) -> int:
        return len(self.pures)

    @cached_property
    def density(self) -> DensityMatrix:
        return density_from_preparation(self)


def density_from_preparation(prep: MixedPreparation) -> DensityMatrix:
    """(1/β) Σ α_i |ψ_i⟩⟨ψ_i|"""
    dims = {p.dim for p in prep.pures}
    if len(dims) != 1:
        raise DimensionMismatchError(f"混合制备中纯态维数不一致: {sorted(dims)}")
    d = dims.pop()
    rho = np.zeros((d, d), dtype=complex)
    for alpha, psi in zip(prep.alphas, prep.pures):
        if alpha:
            rho += (alpha / prep.beta) * psi.projector()
    return DensityMatrix(hermitize(rho))


@dataclass(frozen=True)
class BlochVector:
    """Bloch 球上的实三维向量"""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, float(getattr(self, name)))
        norm = self.norm
        if not math.isfinite(norm) or norm > 1.0 + _TOL.BLOCH_NORM:
            raise StructuralError(f"Bloch 向量模长超过 1: {norm!r}")

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "BlochVector":
        arr = np.asarray(values, dtype=float).reshape(-1)
        if arr.shape != (3,):
            raise StructuralError(f"Bloch 向量必须有 3 个分量，实际 {arr.shape}")
        return cls(arr[0], arr[1], arr[2])

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def is_unit(self, tol: float = _TOL.BLOCH_NORM) -> bool:
        return abs(self.norm - 1.0) <= tol

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def dot(self, other: "BlochVector") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def angle(self, other: "BlochVector") -> float:
        """两单位向量夹角，范围 [0, π]"""
        return math.acos(max(-1.0, min(1.0, self.dot(other))))


@dataclass(frozen=True, eq=False)
class Povm:
    """半正定效应算子组，和为单位阵"""

    effects: Tuple[np.ndarray, ...]

    def __post_init__(self):
        effects = tuple(np.asarray(e, dtype=complex) for e in self.effects)
        if len(effects) == 0:
            raise StructuralError("POVM 至少需要一个效应算子")
        shapes = {e.shape for e in effects}
        if len(shapes) != 1:
            raise DimensionMismatchError(f"POVM 效应算子形状不一致: {sorted(shapes)}")
        shape = shapes.pop()
        if len(shape) != 2 or shape[0] != shape[1]:
            raise StructuralError(f"效应算子必须是方阵，实际形状 {shape}")

        tol = _TOL.POVM
        for k, e in enumerate(effects):
            deviation = hermitian_deviation(e)
            if deviation > tol:
                raise StructuralError(f"效应算子 {k} 不是厄米的", {"deviation": deviation})
            smallest = float(eigvalsh(e)[0])
            if smallest < -tol:
                raise StructuralError(f"效应算子 {k} 不是半正定的", {"min_eigenvalue": smallest})
        completeness = float(np.max(np.abs(sum(effects) - np.eye(shape[0]))))
        if completeness > tol:
            raise StructuralError("POVM 效应算子之和不等于单位阵", {"deviation": completeness})
        object.__setattr__(self, "effects", tuple(_frozen(hermitize(e)) for e in effects))

    @property
    def n(self) -> int:
        return len(self.effects)

    @property
    def dim(self) -> int:
        return int(self.effects[0].shape[0])

    def probabilities(self, rho: DensityMatrix) -> np.ndarray:
        """各结果的 Born 概率"""
        if rho.dim != self.dim:
            raise DimensionMismatchError(f"维数不一致: 态 {rho.dim}, POVM {self.dim}")
        return np.array([rho.expectation(e) for e in self.effects])

    def error_sum(self, states: Sequence[DensityMatrix]) -> float:
        """Σ_x Tr(ρ_x M_x)"""
        if len(states) != self.n:
            raise StructuralError(f"态数量 {len(states)} 与结果数 {self.n} 不一致")
        return float(sum(rho.expectation(e) for rho, e in zip(states, self.effects)))


def repair_povm(effects: Sequence[np.ndarray]) -> Povm:
    """截断负本征值后以 S^{-1/2} M_x S^{-1/2} 恢复完备性"""
    clipped = [psd_clip(e) for e in effects]
    total = sum(clipped)
    s_inv = inverse_sqrt(total)
    return Povm(tuple(hermitize(s_inv @ e @ s_inv) for e in clipped))


def as_density_matrices(states: Iterable) -> List[DensityMatrix]:
    """把 PureState / MixedPreparation / 数组统一成 DensityMatrix 列表"""
    result: List[DensityMatrix] = []
    for state in states:
        if isinstance(state, DensityMatrix):
            result.append(state)
        elif isinstance(state, PureState):
            result.append(state.density())
        elif isinstance(state, MixedPreparation):
            result.append(state.density)
        else:
            result.append(DensityMatrix(np.asarray(state, dtype=complex)))
    return result


def common_dimension(states: Sequence, what: str = "态") -> int:
    """检查并返回公共维数"""
    dims = {s.dim for s in states}
    if len(dims) != 1:
        raise DimensionMismatchError(f"{what}维数不一致: {sorted(dims)}")
    return dims.pop()


__all__: List[str] = [
    "PureState",
    "DensityMatrix",
    "MixedPreparation",
    "BlochVector",
    "Povm",
    "density_from_preparation",
    "repair_povm",
    "as_density_matrices",
    "common_dimension",
]
