"""
抗区分性工具箱配置文件
"""

from typing import Dict, Any, List, Optional

from pydantic import BaseModel, ConfigDict
from pydantic_settings import BaseSettings, SettingsConfigDict


class ToleranceSettings(BaseModel):
    """数值容差（所有不变量检查共用）"""

    model_config = ConfigDict(frozen=True)

    NORM: float = 1e-12               # 纯态归一化
    HERMITIAN: float = 1e-12          # 密度矩阵厄米性
    TRACE: float = 1e-12              # 密度矩阵迹
    DENSITY_EIGEN: float = 1e-10      # 密度矩阵最小本征值下界（取负号）
    POVM: float = 1e-9                # POVM 正定性与完备性
    BLOCH_NORM: float = 1e-12         # Bloch 向量模长
    ROUNDTRIP: float = 1e-10          # Bloch 往返映射
    MUB: float = 1e-10                # MUB 交叉重叠
    DUAL_FEASIBILITY: float = 1e-8    # 对偶证书 Y ⪯ ρ_x
    GEOMETRY: float = 1e-9            # 大圆与角度不等式
    CRITERION: float = 1e-12          # Johnston / Caves / Lewis 判据
    CATEGORY: float = 1e-6            # 分类阈值
    WITNESS: float = 1e-9             # S 见证中 D_Q 接近 1 的判定
    TUPLE_ZERO: float = 1e-9          # 正交对判定


class SdpSettings(BaseModel):
    """半正定规划求解配置"""

    model_config = ConfigDict(frozen=True)

    GAP_TOLERANCE: float = 1e-6
    PERFECT_THRESHOLD: float = 1e-7
    SOLVERS: List[str] = ["CLARABEL", "SCS"]
    SOLVER_OPTIONS: Dict[str, Dict[str, Any]] = {
        "CLARABEL": {"tol_gap_abs": 1e-9, "tol_gap_rel": 1e-9, "tol_feas": 1e-9},
        "SCS": {"eps_abs": 1e-9, "eps_rel": 1e-9, "max_iters": 100000},
    }
    MAX_DIMENSION: int = 32           # 超过后记录警告


class KsSettings(BaseModel):
    """Kochen-Specker 模型蒙特卡洛积分配置"""

    model_config = ConfigDict(frozen=True)

    SAMPLES: int = 1_000_000
    MIN_SAMPLES: int = 1000
    SEED: int = 20240917
    SCHEME: str = "uniform-random"
    CHUNK_SIZE: int = 1 << 16
    MAX_WORKERS: int = 1


class ClassifySettings(BaseModel):
    """分类引擎配置"""

    model_config = ConfigDict(frozen=True)

    MAX_TUPLES: int = 100_000
    MAX_WORKERS: int = 1
    SPOT_CHECKS: int = 20


class Settings(BaseSettings):
    """系统设置"""

    # 基础配置
    APP_NAME: str = "antidist-toolkit"
    VERSION: str = "1.0.0"
    DEBUG: bool = False

    # 日志配置
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None

    # 数值配置
    TOLERANCES: ToleranceSettings = ToleranceSettings()
    SDP: SdpSettings = SdpSettings()
    KS: KsSettings = KsSettings()
    CLASSIFY: ClassifySettings = ClassifySettings()

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="ANTIDIST_",
        env_nested_delimiter="__",
        case_sensitive=True,
        extra="ignore",
        frozen=True,
    )


# 创建全局设置实例
settings = Settings()
