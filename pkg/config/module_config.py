"""
各计算模块的特定配置
"""

from typing import Dict, Any

from .settings import settings


# 半正定规划配置
SDP_CONFIG: Dict[str, Any] = {
    "gap_tolerance": settings.SDP.GAP_TOLERANCE,
    "perfect_threshold": settings.SDP.PERFECT_THRESHOLD,
    "solvers": list(settings.SDP.SOLVERS),
    "solver_options": {k: dict(v) for k, v in settings.SDP.SOLVER_OPTIONS.items()},
    "max_dimension": settings.SDP.MAX_DIMENSION,
}

# Kochen-Specker 积分配置
KS_CONFIG: Dict[str, Any] = {
    "samples": settings.KS.SAMPLES,
    "min_samples": settings.KS.MIN_SAMPLES,
    "seed": settings.KS.SEED,
    "scheme": settings.KS.SCHEME,
    "chunk_size": settings.KS.CHUNK_SIZE,
    "max_workers": settings.KS.MAX_WORKERS,
}

# 分类引擎配置
CLASSIFY_CONFIG: Dict[str, Any] = {
    "max_tuples": settings.CLASSIFY.MAX_TUPLES,
    "max_workers": settings.CLASSIFY.MAX_WORKERS,
    "category_tolerance": settings.TOLERANCES.CATEGORY,
    "gap_tolerance": settings.SDP.GAP_TOLERANCE,
    "perfect_threshold": settings.SDP.PERFECT_THRESHOLD,
    "spot_checks": settings.CLASSIFY.SPOT_CHECKS,
}
