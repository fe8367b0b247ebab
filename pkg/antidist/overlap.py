"""
量子重叠 ω_Q^[n] = n(1 − A_Q^[n]) 与完美反区分判定
"""

import logging
import math
from typing import Optional, Sequence

from config.settings import settings
from quantum.measures import overlap_abs
from quantum.states import PureState
from .sdp import antidist_sdp

logger = logging.getLogger(__name__)


def quantum_overlap(states: Sequence, gap_tolerance: Optional[float] = None) -> float:
    """ω_Q^[n]，容差检查后截断到 [0, 1]"""
    result = antidist_sdp(states, gap_tolerance)
    omega = result.primal_value
    tol = 2.0 * (gap_tolerance or settings.SDP.GAP_TOLERANCE)
    if omega < -tol or omega > 1.0 + tol:
        logger.warning(f"ω_Q = {omega!r} 超出 [0, 1] 的容差范围")
    return min(1.0, max(0.0, omega))


def pair_overlap_pure(a: PureState, b: PureState) -> float:
    """两纯态的 ω_Q = 1 − √(1 − |⟨a|b⟩|²)"""
    x = overlap_abs(a, b)
    return 1.0 - math.sqrt(max(0.0, 1.0 - x * x))


def is_perfectly_antidist(states: Sequence, tol: Optional[float] = None) -> bool:
    """原问题值与对偶值都不超过 tol 时为真"""
    tol = settings.SDP.PERFECT_THRESHOLD if tol is None else tol
    result = antidist_sdp(states)
    return result.primal_value <= tol and result.dual_value <= tol
