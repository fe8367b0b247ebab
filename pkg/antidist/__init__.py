"""
反区分度模块
半正定规划求解 A_Q^[n]、最优 POVM 与对偶证书
"""

from .sdp import AntidistSolver, SdpResult, antidist_sdp
from .overlap import is_perfectly_antidist, pair_overlap_pure, quantum_overlap

__all__ = [
    "AntidistSolver",
    "SdpResult",
    "antidist_sdp",
    "is_perfectly_antidist",
    "pair_overlap_pure",
    "quantum_overlap",
]
