"""
命令行输出的 JSON 序列化: 浮点数保留 12 位有效数字，非有限数写成字符串
"""

import json
import math
from enum import Enum
from typing import Any

import numpy as np

SIGNIFICANT_DIGITS = 12
# 双精度往返所需位数，用于写回可再读入的数据文件
EXACT_DIGITS = 17


def round_significant(x: float, digits: int = SIGNIFICANT_DIGITS) -> Any:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    value = float(f"{x:.{digits}g}")
    # 避免输出 -0.0
    return 0.0 if value == 0.0 else value


def to_jsonable(obj: Any, digits: int = SIGNIFICANT_DIGITS) -> Any:
    """递归转换为可 JSON 化的结构"""
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return round_significant(float(obj), digits)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v, digits) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist(), digits)
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict(), digits)
    return obj


def dumps(obj: Any, digits: int = SIGNIFICANT_DIGITS) -> str:
    return json.dumps(to_jsonable(obj, digits), ensure_ascii=False, indent=2)
