"""
两个混合制备的认知重叠上界与相关闭式界
"""

import itertools
import logging
import math
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from config.settings import settings
from quantum.exceptions import DimensionMismatchError, DomainError
from quantum.measures import overlap_abs
from quantum.mub import supports_mub_dimension
from quantum.states import MixedPreparation, PureState
from .decomposition import validate_preparations
from .tuple_resolver import TupleResolver

logger = logging.getLogger(__name__)


def _require_int(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or int(value) != value or value < minimum:
        raise DomainError(f"{name} 必须是 ≥ {minimum} 的整数，实际 {value!r}")
    return int(value)


def _require_mub_dimension(d: int) -> int:
    d = _require_int(d, "d", 4)
    if not supports_mub_dimension(d):
        raise DomainError(f"d 必须是素数或 4，实际 {d}")
    return d


def corollary5_bound(d: int) -> float:
    """d − √(d(d−1))，按 d / (d + √(d(d−1))) 计算以避免相消"""
    d = _require_int(d, "d", 2)
    return d / (d + math.sqrt(d * (d - 1.0)))


def theorem5_bound(
    rho0: MixedPreparation,
    rhos: Sequence[MixedPreparation],
    resolver: Optional[TupleResolver] = None,
) -> float:
    """
    Σ_k ω_E(ρ0, ρk) ≤ 1 + (3/2d) Σ_{j, (k,i) ≠ (k′,i′)} (1 − A_Q(ψ_j, φ_{i|k}, φ_{i′|k′}))

    φ 对取自所有制备的纯态并集中的有序不同对。
    """
    d = validate_preparations([rho0, *rhos])
    for k, prep in enumerate([rho0, *rhos]):
        if prep.beta != d or prep.size != d or any(a != 1 for a in prep.alphas):
            raise DomainError(f"第 {k} 个制备不是 {d} 个纯态的等权混合")

    resolver = resolver or TupleResolver()
    pooled = [phi for prep in rhos for phi in prep.pures]
    cache: Dict[Tuple[int, FrozenSet[int]], float] = {}

    deficit = 0.0
    for j, psi in enumerate(rho0.pures):
        for u, w in itertools.combinations(range(len(pooled)), 2):
            key = (j, frozenset((u, w)))
            if key not in cache:
                cert = resolver.resolve_safe((psi, pooled[u], pooled[w]))
                cache[key] = 1.0 - cert.a_q if not cert.antidist else 0.0
            # 有序对 (u, w) 与 (w, u) 各计一次
            deficit += 2.0 * cache[key]

    bound = 1.0 + 3.0 * deficit / (2.0 * d)
    logger.info(f"theorem5 上界: {len(cache)} 个三元组, 结果 {bound:.12g}, 判定方法 {resolver.stats}")
    return bound


def theorem7_avg_ratio_bound(d: int) -> float:
    """d+1 组 MUB 构造的最大混合制备，平均比值上界 1/d"""
    return 1.0 / _require_mub_dimension(d)


def theorem8_bound(n: int, d: int) -> float:
    """8 d^{1/(d−2)} / n^{(d−3)/(d−2)}"""
    n = _require_int(n, "n", 1)
    d = _require_int(d, "d", 4)
    return 8.0 * d ** (1.0 / (d - 2)) / n ** ((d - 3.0) / (d - 2.0))


def psi_epistemic_ratio_bound(d: int) -> float:
    """MUB 纯态对的 ω_E/ω_Q 上界 2/d"""
    return 2.0 / _require_mub_dimension(d)


def mub_pair_ratio(d: int) -> float:
    """1/(d²(1 − √(1 − 1/d)))，等价地 (1 + √(1 − 1/d))/d"""
    d = _require_int(d, "d", 2)
    return (1.0 + math.sqrt(1.0 - 1.0 / d)) / d


def lewis_threshold(psi: PureState, phi: PureState, d: int) -> bool:
    """|⟨ψ|φ⟩|² > (d−1)/d 时存在 Lewis 型认知模型"""
    if psi.dim != d or phi.dim != d:
        raise DimensionMismatchError(f"态维数 ({psi.dim}, {phi.dim}) 与 d = {d} 不一致")
    return overlap_abs(psi, phi) ** 2 > (d - 1) / d + settings.TOLERANCES.CRITERION
