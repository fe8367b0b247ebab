"""
互不偏基 (MUB) 构造

支持 d = 2（Pauli 本征基）、奇素数 d（二次相位）以及 d = 4（固定表）。
"""

import logging
from typing import List

import numpy as np
from sympy import isprime

from .exceptions import CapabilityError, RangeError
from .states import PureState

logger = logging.getLogger(__name__)

_S2 = 1.0 / np.sqrt(2.0)

_QUBIT_BASES = [
    [[1.0, 0.0], [0.0, 1.0]],                     # z
    [[_S2, _S2], [_S2, -_S2]],                    # x
    [[_S2, 1j * _S2], [_S2, -1j * _S2]],          # y
]

# d = 4 的五组基，每行是一个基矢（除以 2）
_QUART_BASES = [
    np.eye(4, dtype=complex) * 2.0,
    [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]],
    [[1, -1, -1j, -1j], [1, 1, -1j, 1j], [1, 1, 1j, -1j], [1, -1, 1j, 1j]],
    [[1, -1j, -1j, -1], [1, 1j, 1j, -1], [1, -1j, 1j, 1], [1, 1j, -1j, 1]],
    [[1, -1j, -1, -1j], [1, 1j, -1, 1j], [1, -1j, 1, 1j], [1, 1j, 1, -1j]],
]


def supports_mub_dimension(d: int) -> bool:
    return d == 4 or (d >= 2 and bool(isprime(d)))


def _prime_bases(d: int, count: int) -> List[np.ndarray]:
    """计算基加上分量为 ω^(a m² + b m)/√d 的 d 组基"""
    bases = [np.eye(d, dtype=complex)]
    m = np.arange(d)
    for a in range(count - 1):
        rows = [np.exp(2j * np.pi * ((a * m * m + b * m) % d) / d) / np.sqrt(d) for b in range(d)]
        bases.append(np.array(rows))
    return bases


def mub_bases(d: int, count: int) -> List[List[PureState]]:
    """返回 count 组正交归一基，不同基的态满足 |⟨ψ|φ⟩|² = 1/d"""
    if not supports_mub_dimension(d):
        raise CapabilityError(f"不支持维数 {d} 的 MUB 构造（仅支持素数或 4）", {"dim": d})
    if not 1 <= count <= d + 1:
        raise RangeError(f"MUB 数量必须在 1..{d + 1} 之间，实际 {count}", {"count": count})

    if d == 2:
        tables = [np.asarray(t, dtype=complex) for t in _QUBIT_BASES]
    elif d == 4:
        tables = [np.asarray(t, dtype=complex) / 2.0 for t in _QUART_BASES]
    else:
        tables = _prime_bases(d, count)

    bases = [[PureState(row) for row in table] for table in tables[:count]]
    logger.debug(f"构造 MUB: d={d}, count={count}")
    return bases
