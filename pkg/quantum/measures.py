"""
态之间的重叠、迹距离与可区分度
"""

from .exceptions import DimensionMismatchError
from .linalg import trace_norm
from .states import DensityMatrix, PureState


def _check_dims(a, b) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"维数不一致: {a.dim} vs {b.dim}")


def overlap_abs(a: PureState, b: PureState) -> float:
    """|⟨a|b⟩|，截断到 [0, 1]"""
    _check_dims(a, b)
    return min(1.0, abs(a.inner(b)))


def trace_distance(r: DensityMatrix, s: DensityMatrix) -> float:
    """T(r, s) = ½ Tr|r − s|"""
    _check_dims(r, s)
    value = 0.5 * trace_norm(r.entries - s.entries)
    return min(1.0, max(0.0, value))


def distinguishability(r: DensityMatrix, s: DensityMatrix) -> float:
    """D_Q(r, s) = ½ (1 + T(r, s))"""
    return 0.5 * (1.0 + trace_distance(r, s))
