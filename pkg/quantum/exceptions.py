"""
工具箱统一异常层次
"""

from typing import Any, Dict, Optional


class AntidistError(Exception):
    """所有工具箱错误的基类"""

    error_code = "error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """转换为机器可读的错误对象"""
        return {
            "error_code": self.error_code,
            "error_type": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class StructuralError(AntidistError, ValueError):
    """领域类型不变量被破坏"""

    error_code = "structural"


class DimensionMismatchError(StructuralError):
    """维度不一致"""

    error_code = "dimension_mismatch"


class CapabilityError(AntidistError):
    """不支持的维度或功能"""

    error_code = "capability"


class RangeError(AntidistError, ValueError):
    """参数超出允许范围"""

    error_code = "range"


class DomainError(AntidistError, ValueError):
    """定理前提不满足"""

    error_code = "domain"


class WitnessUndefinedError(DomainError):
    """S 见证无定义（混合制备完全可区分）"""

    error_code = "witness_undefined"


class ConvergenceError(AntidistError):
    """求解器未达到对偶间隙容差"""

    error_code = "convergence"

    def __init__(
        self,
        message: str,
        best_primal: float = float("inf"),
        best_dual: float = float("-inf"),
        solver_log: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(
            message,
            {
                "best_primal": best_primal,
                "best_dual": best_dual,
                "solver_log": solver_log or {},
            },
        )
        self.best_primal = best_primal
        self.best_dual = best_dual
        self.solver_log = solver_log or {}
