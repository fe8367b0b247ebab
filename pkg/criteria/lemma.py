"""
n 组非负数的组合不等式: min_k Σ_i a_{i|k} ≤ Σ_{i_1..i_n} min_k a_{i_k|k}
"""

import logging
from dataclasses import dataclass, asdict
from functools import reduce
from typing import Any, Dict, Sequence

import numpy as np

from config.settings import settings
from quantum.exceptions import DomainError, RangeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Lemma1Result:
    lhs: float
    rhs: float
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def pad_sets(sets: Sequence[Sequence[float]]) -> np.ndarray:
    """长度不一的组用 0 补齐为 n×r 数组"""
    if len(sets) == 0:
        raise RangeError("至少需要一组数")
    r = max(len(s) for s in sets)
    table = np.zeros((len(sets), max(r, 1)), dtype=float)
    for k, s in enumerate(sets):
        table[k, : len(s)] = np.asarray(s, dtype=float)
    if not np.all(np.isfinite(table)):
        raise DomainError("输入包含非有限数")
    if np.any(table < 0):
        raise DomainError("所有数必须非负")
    return table


def lemma1_check(sets: Sequence[Sequence[float]]) -> Lemma1Result:
    table = pad_sets(sets)
    n, r = table.shape

    lhs = float(table.sum(axis=1).min())
    # 第 k 组沿第 k 个轴展开，广播后逐点取最小
    axes = [table[k].reshape([r if j == k else 1 for j in range(n)]) for k in range(n)]
    rhs = float(reduce(np.minimum, axes).sum())

    holds = lhs <= rhs + settings.TOLERANCES.CRITERION
    if lhs == 0.0 and rhs != 0.0:
        logger.error(f"左端为 0 但右端为 {rhs!r}")
        holds = False
    return Lemma1Result(lhs=lhs, rhs=rhs, holds=holds)
