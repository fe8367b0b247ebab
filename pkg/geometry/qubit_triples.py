"""
量子比特三元组的完美反区分几何判据与显式 POVM 构造
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from config.settings import settings
from quantum.bloch import bloch_from_qubit
from quantum.exceptions import DimensionMismatchError, DomainError
from quantum.measures import overlap_abs
from quantum.states import Povm, PureState, repair_povm
from .hemisphere import great_circle_test

logger = logging.getLogger(__name__)

HALF_PI = 0.5 * math.pi

# 三条角度和不等式: (名称, 两个重叠的下标)
_ANGLE_CONDITIONS = (
    ("acos(a) + acos(b) >= pi/2", (0, 1)),
    ("acos(a) + acos(c) >= pi/2", (0, 2)),
    ("acos(b) + acos(c) >= pi/2", (1, 2)),
)


def _require_qubits(*states: PureState) -> None:
    for s in states:
        if s.dim != 2:
            raise DimensionMismatchError(f"需要量子比特态，实际维数 {s.dim}")


def triple_overlaps(p1: PureState, p2: PureState, p3: PureState) -> Tuple[float, float, float]:
    """a = |⟨1|2⟩|, b = |⟨1|3⟩|, c = |⟨2|3⟩|"""
    return overlap_abs(p1, p2), overlap_abs(p1, p3), overlap_abs(p2, p3)


def triple_violations(p1: PureState, p2: PureState, p3: PureState, tol: Optional[float] = None) -> List[str]:
    """返回不满足的条件名称，空列表表示可完美反区分"""
    _require_qubits(p1, p2, p3)
    tol = settings.TOLERANCES.GEOMETRY if tol is None else tol
    failed: List[str] = []
    if not great_circle_test(bloch_from_qubit(p1), bloch_from_qubit(p2), bloch_from_qubit(p3), tol):
        failed.append("great circle")
    angles = [math.acos(x) for x in triple_overlaps(p1, p2, p3)]
    for name, (i, j) in _ANGLE_CONDITIONS:
        if angles[i] + angles[j] - HALF_PI < -tol:
            failed.append(name)
    return failed


def qubit_triple_antidist(p1: PureState, p2: PureState, p3: PureState) -> bool:
    """共大圆且三条角度和不等式成立"""
    return not triple_violations(p1, p2, p3)


@dataclass(frozen=True, eq=False)
class CanonicalFrame:
    """把公共大圆转到 z-x 平面、p1 转到 +z 的旋转"""

    rotation: np.ndarray
    rotated: np.ndarray
    signed_angles: Tuple[float, float]

    @property
    def out_of_plane(self) -> float:
        return float(np.max(np.abs(self.rotated[:, 1])))


def canonical_frame(p1: PureState, p2: PureState, p3: PureState) -> CanonicalFrame:
    _require_qubits(p1, p2, p3)
    v = np.array([bloch_from_qubit(p).as_array() for p in (p1, p2, p3)])
    z_axis = v[0]

    normal = np.cross(v[0], v[1])
    if np.linalg.norm(normal) < settings.TOLERANCES.GEOMETRY:
        normal = np.cross(v[0], v[2])
    if np.linalg.norm(normal) < settings.TOLERANCES.GEOMETRY:
        # 三点共线，任取一条过 p1 的大圆
        helper = np.eye(3)[int(np.argmin(np.abs(z_axis)))]
        normal = np.cross(z_axis, helper)
    y_axis = normal / np.linalg.norm(normal)
    x_axis = np.cross(y_axis, z_axis)

    rotation = np.vstack([x_axis, y_axis, z_axis])
    rotated = v @ rotation.T
    signed = tuple(float(math.atan2(r[0], r[2])) for r in rotated[1:])
    return CanonicalFrame(rotation=rotation, rotated=rotated, signed_angles=signed)


def antidist_gammas(p1: PureState, p2: PureState, p3: PureState) -> Tuple[float, float, float]:
    """
    γ 系数: ν 为 p1 到 p2 的 Bloch 夹角，ν′ 为 p1 到 p3 的夹角

    D = sin ν + sin ν′ − sin(ν+ν′)，γ1 = −2 sin(ν+ν′)/D，γ2 = 2 sin ν′/D，γ3 = 2 sin ν/D。
    """
    a, b, c = triple_overlaps(p1, p2, p3)
    if max(a, b, c) >= 1.0 - settings.TOLERANCES.NORM:
        raise DomainError("三元组中存在相同的态，γ 的分母为零", {"overlaps": [a, b, c]})
    nu = min(math.pi, max(0.0, 2.0 * math.acos(a)))
    nu_p = min(math.pi, max(0.0, 2.0 * math.acos(b)))
    denom = math.sin(nu) + math.sin(nu_p) - math.sin(nu + nu_p)
    return (
        -2.0 * math.sin(nu + nu_p) / denom,
        2.0 * math.sin(nu_p) / denom,
        2.0 * math.sin(nu) / denom,
    )


def antidist_povm_qubit(p1: PureState, p2: PureState, p3: PureState) -> Povm:
    """构造 M_k = γ_k (I − |ψ_k⟩⟨ψ_k|)，满足 Tr(ψ_k M_k) = 0"""
    failed = triple_violations(p1, p2, p3)
    if failed:
        raise DomainError(f"三元组不可完美反区分，不满足: {', '.join(failed)}", {"failed": failed})

    gammas = antidist_gammas(p1, p2, p3)
    tol = settings.TOLERANCES.POVM
    if min(gammas) < -tol:
        raise DomainError(f"γ 系数为负: {gammas}", {"gammas": list(gammas)})

    frame = canonical_frame(p1, p2, p3)
    logger.debug(
        f"γ-POVM: γ={tuple(round(g, 12) for g in gammas)}, "
        f"平面夹角={frame.signed_angles}, 面外偏差={frame.out_of_plane:.2e}"
    )

    identity = np.eye(2, dtype=complex)
    effects = [
        max(0.0, g) * (identity - p.projector()) for g, p in zip(gammas, (p1, p2, p3))
    ]
    return repair_povm(effects)
