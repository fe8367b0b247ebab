"""
复数与矩阵的 JSON 编码: 复数写作 [re, im]
"""

from typing import Any, Dict, List, Sequence

import numpy as np

from .exceptions import StructuralError
from .states import DensityMatrix, MixedPreparation, PureState


def encode_complex(z: complex) -> List[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def decode_complex(pair: Sequence[float]) -> complex:
    if len(pair) != 2:
        raise StructuralError(f"复数必须写成 [re, im]，实际 {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def encode_vector(values: np.ndarray) -> List[List[float]]:
    return [encode_complex(z) for z in np.asarray(values).reshape(-1)]


def decode_vector(items: Sequence[Sequence[float]]) -> np.ndarray:
    return np.array([decode_complex(p) for p in items], dtype=complex)


def encode_matrix(matrix: np.ndarray) -> List[List[List[float]]]:
    return [encode_vector(row) for row in np.asarray(matrix)]


def decode_matrix(rows: Sequence[Sequence[Sequence[float]]]) -> np.ndarray:
    matrix = [decode_vector(row) for row in rows]
    if len({len(r) for r in matrix}) > 1:
        raise StructuralError("矩阵各行长度不一致")
    return np.array(matrix, dtype=complex)


def pure_state_to_dict(psi: PureState) -> Dict[str, Any]:
    return {"dim": psi.dim, "amplitudes": encode_vector(psi.amplitudes)}


def pure_state_from_dict(data: Dict[str, Any]) -> PureState:
    amps = decode_vector(data["amplitudes"])
    if "dim" in data and int(data["dim"]) != len(amps):
        raise StructuralError(f"声明维数 {data['dim']} 与振幅个数 {len(amps)} 不一致")
    return PureState(amps)


def density_to_dict(rho: DensityMatrix) -> Dict[str, Any]:
    return {"dim": rho.dim, "rows": encode_matrix(rho.entries)}


def density_from_dict(data: Dict[str, Any]) -> DensityMatrix:
    entries = decode_matrix(data["rows"])
    if "dim" in data and entries.shape != (int(data["dim"]), int(data["dim"])):
        raise StructuralError(f"声明维数 {data['dim']} 与矩阵形状 {entries.shape} 不一致")
    return DensityMatrix(entries)


def preparation_to_dict(prep: MixedPreparation) -> Dict[str, Any]:
    return {
        "beta": prep.beta,
        "terms": [
            {"alpha": alpha, "state": pure_state_to_dict(psi)}
            for alpha, psi in zip(prep.alphas, prep.pures)
        ],
    }


def preparation_from_dict(data: Dict[str, Any]) -> MixedPreparation:
    terms = data["terms"]
    return MixedPreparation(
        tuple(pure_state_from_dict(t["state"]) for t in terms),
        tuple(t["alpha"] for t in terms),
        data["beta"],
    )
