"""
完美反区分的充分判据: 正交对、Johnston 重叠阈值、Caves 三元组条件
"""

import itertools
import math
from typing import Optional, Sequence

from config.settings import settings
from quantum.exceptions import RangeError
from quantum.measures import overlap_abs
from quantum.states import PureState, common_dimension


def has_orthogonal_pair(states: Sequence[PureState], tol: Optional[float] = None) -> bool:
    """含正交对的纯态组总可完美反区分（测量其中一个态的投影及其补）"""
    tol = settings.TOLERANCES.TUPLE_ZERO if tol is None else tol
    return any(overlap_abs(a, b) <= tol for a, b in itertools.combinations(states, 2))


def johnston_threshold(n: int) -> float:
    return math.sqrt((n - 2) / (n - 1)) / math.sqrt(2.0)


def johnston_criterion(states: Sequence[PureState], tol: Optional[float] = None) -> bool:
    """所有两两重叠 ≤ (1/√2)√((N−2)/(N−1))"""
    n = len(states)
    if n < 3:
        raise RangeError(f"Johnston 判据需要至少 3 个态，实际 {n}")
    common_dimension(states)
    tol = settings.TOLERANCES.CRITERION if tol is None else tol
    threshold = johnston_threshold(n) + tol
    return all(overlap_abs(a, b) <= threshold for a, b in itertools.combinations(states, 2))


def caves_criterion(x1: float, x2: float, x3: float, tol: Optional[float] = None) -> bool:
    """
    纯态三元组的平方重叠满足 x1+x2+x3 < 1 且 (x1+x2+x3−1)² ≥ 4 x1 x2 x3

    第一个不等式严格检验，第二个允许 −tol 的舍入。
    """
    tol = settings.TOLERANCES.CRITERION if tol is None else tol
    xs = (float(x1), float(x2), float(x3))
    for x in xs:
        if not math.isfinite(x) or x < -tol or x > 1.0 + tol:
            raise RangeError(f"平方重叠必须在 [0, 1] 内，实际 {xs}")
    s = sum(xs)
    return s < 1.0 - tol and (s - 1.0) ** 2 - 4.0 * xs[0] * xs[1] * xs[2] >= -tol


def caves_for_states(p1: PureState, p2: PureState, p3: PureState) -> bool:
    return caves_criterion(
        overlap_abs(p1, p2) ** 2,
        overlap_abs(p1, p3) ** 2,
        overlap_abs(p2, p3) ** 2,
    )
