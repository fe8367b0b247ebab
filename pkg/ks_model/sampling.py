"""
单位球面上的确定性采样

样本按固定大小的块生成，第 c 块使用 Philox(seed).jumped(c)，
结果只取决于 (seed, N, scheme)，与线程数无关。
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from config.module_config import KS_CONFIG
from config.settings import settings
from quantum.exceptions import RangeError, StructuralError

logger = logging.getLogger(__name__)


class SamplingScheme(Enum):
    """采样方案"""
    UNIFORM_RANDOM = "uniform-random"
    STRATIFIED = "stratified"


def chunk_generator(seed: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed).jumped(chunk))


def stratified_grid(n: int) -> tuple:
    """等面积网格: ⌊√N⌋ 个 z 带 × ⌊N/⌊√N⌋⌋ 个方位扇区"""
    bands = max(1, math.isqrt(n))
    sectors = max(1, n // bands)
    return bands, sectors


def _uniform_chunk(rng: np.random.Generator, start: int, stop: int, n: int) -> np.ndarray:
    g = rng.standard_normal(size=(stop - start, 3))
    norms = np.linalg.norm(g, axis=1)
    # 零向量的概率为 0，仍按 z 轴处理
    bad = norms == 0.0
    if np.any(bad):
        g[bad] = (0.0, 0.0, 1.0)
        norms[bad] = 1.0
    return g / norms[:, None]


def _stratified_chunk(rng: np.random.Generator, start: int, stop: int, n: int) -> np.ndarray:
    bands, sectors = stratified_grid(n)
    cells = np.arange(start, stop)
    band, sector = np.divmod(cells, sectors)
    u = rng.random(size=(stop - start, 2))
    z = 1.0 - 2.0 * (band + u[:, 0]) / bands
    phi = 2.0 * np.pi * (sector + u[:, 1]) / sectors
    r = np.sqrt(np.clip(1.0 - z * z, 0.0, 1.0))
    points = np.column_stack((r * np.cos(phi), r * np.sin(phi), z))
    return points / np.linalg.norm(points, axis=1)[:, None]


_CHUNK_BUILDERS = {
    SamplingScheme.UNIFORM_RANDOM: _uniform_chunk,
    SamplingScheme.STRATIFIED: _stratified_chunk,
}


@dataclass(frozen=True, eq=False)
class SphereSample:
    """N 个单位三维向量及其生成参数"""

    points: np.ndarray
    seed: int
    scheme: SamplingScheme

    def __post_init__(self):
        points = np.array(self.points, dtype=float, copy=True)
        if points.ndim != 2 or points.shape[1] != 3 or points.shape[0] == 0:
            raise StructuralError(f"样本点必须是 N×3 数组，实际形状 {points.shape}")
        deviation = float(np.max(np.abs(np.linalg.norm(points, axis=1) - 1.0)))
        if deviation > settings.TOLERANCES.NORM:
            raise StructuralError(f"样本点不是单位向量，最大偏差 {deviation:.3e}")
        points.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "scheme", SamplingScheme(self.scheme))

    @property
    def size(self) -> int:
        return int(self.points.shape[0])

    @classmethod
    def generate(
        cls,
        n: int,
        seed: Optional[int] = None,
        scheme: Any = None,
        chunk_size: Optional[int] = None,
        max_workers: Optional[int] = None,
    ) -> "SphereSample":
        """
        生成样本

        Args:
            n: 请求的点数，分层方案会截到完整网格
            seed: 64 位种子，缺省取配置
            scheme: SamplingScheme 或其字符串值
            chunk_size: 每块点数
            max_workers: 并行生成块的线程数

        Returns:
            SphereSample
        """
        if isinstance(n, bool) or int(n) != n or n < 1:
            raise RangeError(f"样本数必须是正整数，实际 {n!r}")
        n = int(n)
        seed = int(KS_CONFIG["seed"] if seed is None else seed)
        if not 0 <= seed < 2 ** 64:
            raise RangeError(f"种子必须在 [0, 2^64) 内，实际 {seed}")
        scheme = SamplingScheme(KS_CONFIG["scheme"] if scheme is None else scheme)
        chunk_size = int(KS_CONFIG["chunk_size"] if chunk_size is None else chunk_size)
        max_workers = int(KS_CONFIG["max_workers"] if max_workers is None else max_workers)
        if chunk_size < 1 or max_workers < 1:
            raise RangeError(f"块大小与线程数必须 ≥ 1，实际 chunk_size={chunk_size}, max_workers={max_workers}")

        total = n
        if scheme == SamplingScheme.STRATIFIED:
            bands, sectors = stratified_grid(n)
            total = bands * sectors
            if total != n:
                logger.info(f"分层采样截到完整网格: {n} -> {total} ({bands}×{sectors})")

        builder = _CHUNK_BUILDERS[scheme]
        bounds = [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]

        def build(c: int) -> np.ndarray:
            start, stop = bounds[c]
            return builder(chunk_generator(seed, c), start, stop, n)

        if max_workers > 1 and len(bounds) > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as pool:
                chunks: List[np.ndarray] = list(pool.map(build, range(len(bounds))))
        else:
            chunks = [build(c) for c in range(len(bounds))]

        logger.debug(f"球面采样: N={total}, seed={seed}, scheme={scheme.value}, 块数 {len(bounds)}")
        return cls(np.vstack(chunks), seed, scheme)

    def to_dict(self) -> Dict[str, Any]:
        """只记录生成参数，点由参数重新生成"""
        return {"size": self.size, "seed": self.seed, "scheme": self.scheme.value}


def sphere_sample(n: Optional[int] = None, seed: Optional[int] = None, scheme: Any = None) -> SphereSample:
    return SphereSample.generate(n or KS_CONFIG["samples"], seed, scheme)
