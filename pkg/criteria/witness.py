"""
奇偶无关复用任务的成功率 S 作为非最大认知解释的见证
"""

import json
import logging
from dataclasses import dataclass, asdict
from typing import Any, Dict, Mapping, Sequence, Tuple, Union

import numpy as np

from config.settings import settings
from quantum.bloch import qubit_from_bloch
from quantum.exceptions import DimensionMismatchError, StructuralError, WitnessUndefinedError
from quantum.measures import distinguishability
from quantum.states import BlochVector, DensityMatrix, Povm, PureState

logger = logging.getLogger(__name__)

LABELS = ("00", "01", "10", "11")


@dataclass(frozen=True)
class SWitnessResult:
    s: float
    ratio_bound: float
    d_q: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SWitnessResult":
        return cls(s=float(data["s"]), ratio_bound=float(data["ratio_bound"]), d_q=float(data["d_q"]))


def _as_labelled(states: Union[Mapping[str, DensityMatrix], Sequence[DensityMatrix]]) -> Dict[str, DensityMatrix]:
    if isinstance(states, Mapping):
        missing = [label for label in LABELS if label not in states]
        if missing:
            raise StructuralError(f"缺少态标签: {missing}")
        return {label: states[label] for label in LABELS}
    if len(states) != 4:
        raise StructuralError(f"需要 4 个态，实际 {len(states)}")
    return dict(zip(LABELS, states))


def parity_mixtures(states: Mapping[str, DensityMatrix]) -> Tuple[DensityMatrix, DensityMatrix]:
    """ρ0 = ½(ρ00 + ρ11)，ρ1 = ½(ρ01 + ρ10)"""
    rho0 = DensityMatrix(0.5 * (states["00"].entries + states["11"].entries))
    rho1 = DensityMatrix(0.5 * (states["01"].entries + states["10"].entries))
    return rho0, rho1


def s_witness(
    states: Union[Mapping[str, DensityMatrix], Sequence[DensityMatrix]],
    measurements: Sequence[Povm],
) -> SWitnessResult:
    """S = (1/8) Σ_{x0x1, y} p(x_y | ρ_{x0x1}, M_y)，比值上界 2(1 − S)/(1 − D_Q(ρ0, ρ1))"""
    labelled = _as_labelled(states)
    if len(measurements) != 2:
        raise StructuralError(f"需要 2 个测量，实际 {len(measurements)}")
    for y, m in enumerate(measurements):
        if m.n != 2:
            raise StructuralError(f"测量 M{y} 必须是二值的，实际 {m.n} 个结果")
    dims = {rho.dim for rho in labelled.values()} | {m.dim for m in measurements}
    if len(dims) != 1:
        raise DimensionMismatchError(f"态与测量维数不一致: {sorted(dims)}")

    total = 0.0
    for label, rho in labelled.items():
        bits = (int(label[0]), int(label[1]))
        for y, m in enumerate(measurements):
            total += rho.expectation(m.effects[bits[y]])
    s = total / 8.0

    rho0, rho1 = parity_mixtures(labelled)
    d_q = distinguishability(rho0, rho1)
    if d_q >= 1.0 - settings.TOLERANCES.WITNESS:
        raise WitnessUndefinedError(
            f"ρ0 与 ρ1 完全可区分 (D_Q = {d_q:.12g})，见证无定义",
            {"s": s, "d_q": d_q},
        )
    ratio = 2.0 * (1.0 - s) / (1.0 - d_q)
    logger.debug(f"S 见证: S={s:.12g}, D_Q={d_q:.12g}, 比值上界={ratio:.12g}")
    return SWitnessResult(s=s, ratio_bound=ratio, d_q=d_q)


def optimal_parity_oblivious_config() -> Tuple[Dict[str, DensityMatrix], Tuple[Povm, Povm]]:
    """Bloch 向量 ((−1)^{x1}, 0, (−1)^{x0})/√2；M0 沿 z 读 x0，M1 沿 x 读 x1"""
    r = 1.0 / np.sqrt(2.0)
    states = {}
    for label in LABELS:
        x0, x1 = int(label[0]), int(label[1])
        v = BlochVector((-1) ** x1 * r, 0.0, (-1) ** x0 * r)
        states[label] = qubit_from_bloch(v).density()
    plus = PureState(np.array([r, r]))
    minus = PureState(np.array([r, -r]))
    m_z = Povm((PureState.basis(2, 0).projector(), PureState.basis(2, 1).projector()))
    m_x = Povm((plus.projector(), minus.projector()))
    return states, (m_z, m_x)


def classical_parity_encoding() -> Tuple[Dict[str, DensityMatrix], Tuple[Povm, Povm]]:
    """d = 4 的确定性编码 |x0 x1⟩，两个测量分别读出 x0 与 x1"""
    states = {label: PureState.basis(4, 2 * int(label[0]) + int(label[1])).density() for label in LABELS}
    proj = [PureState.basis(4, i).projector() for i in range(4)]
    read_x0 = Povm((proj[0] + proj[1], proj[2] + proj[3]))
    read_x1 = Povm((proj[0] + proj[2], proj[1] + proj[3]))
    return states, (read_x0, read_x1)
