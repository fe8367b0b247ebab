"""
Bloch 球上的半球与大圆判据
"""

import logging
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from config.settings import settings
from quantum.bloch import bloch_matrix
from quantum.exceptions import RangeError, StructuralError
from quantum.states import BlochVector

logger = logging.getLogger(__name__)


def hemisphere_witness(vs: Sequence[BlochVector], margin: Optional[float] = None) -> Optional[BlochVector]:
    """
    寻找单位方向 w 使所有 w·v_i > margin

    线性规划: max t，约束 w·v_i ≥ t，w ∈ [−1, 1]³，t ≤ 1。
    最优 t 为正时所有向量严格位于同一开半球。
    """
    if len(vs) == 0:
        raise RangeError("hemisphere_witness 需要至少一个向量")
    margin = settings.TOLERANCES.GEOMETRY if margin is None else margin
    for v in vs:
        if not v.is_unit(settings.TOLERANCES.ROUNDTRIP):
            raise StructuralError(f"需要单位 Bloch 向量，实际模长 {v.norm!r}")

    points = bloch_matrix(vs)
    n = points.shape[0]
    c = np.array([0.0, 0.0, 0.0, -1.0])
    a_ub = np.hstack([-points, np.ones((n, 1))])
    b_ub = np.zeros(n)
    bounds = [(-1.0, 1.0)] * 3 + [(None, 1.0)]

    result = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    if result.status != 0:
        logger.debug(f"半球线性规划未成功: {result.message}")
        return None
    if -result.fun <= margin:
        return None

    w = result.x[:3]
    w = w / np.linalg.norm(w)
    if np.min(points @ w) <= margin:
        return None
    return BlochVector.from_array(w)


def great_circle_test(v1: BlochVector, v2: BlochVector, v3: BlochVector, tol: Optional[float] = None) -> bool:
    """三个向量与原点共面"""
    tol = settings.TOLERANCES.GEOMETRY if tol is None else tol
    det = float(np.linalg.det(bloch_matrix([v1, v2, v3])))
    return abs(det) <= tol
