"""
纯态元组的反区分度求解: 先走快速判据，不行再解 SDP
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
from typing import Any, Dict, List, Optional, Sequence

from antidist.overlap import pair_overlap_pure
from antidist.sdp import AntidistSolver
from config.module_config import CLASSIFY_CONFIG
from geometry.qubit_triples import qubit_triple_antidist
from quantum.exceptions import ConvergenceError
from quantum.states import PureState, common_dimension
from .antidist_criteria import caves_for_states, has_orthogonal_pair, johnston_criterion

UNCONVERGED = "unconverged"


@dataclass(frozen=True)
class TupleCertificate:
    """单个纯态元组的判定结果"""

    antidist: bool
    a_q: float
    method: str
    omega: float                      # 计入上界的 ω_Q 贡献，完美反区分时为 0
    verified_a_q: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TupleCertificate":
        verified = data.get("verified_a_q")
        return cls(
            antidist=bool(data["antidist"]),
            a_q=float(data["a_q"]),
            method=str(data["method"]),
            omega=float(data["omega"]),
            verified_a_q=None if verified is None else float(verified),
        )


class TupleResolver:
    """按 正交对 → 量子比特几何 → Caves → Johnston → 闭式 → SDP 的顺序判定"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = {**CLASSIFY_CONFIG, **(config or {})}
        self.logger = logging.getLogger(__name__)
        self.perfect_threshold = self.config["perfect_threshold"]
        self.max_workers = self.config["max_workers"]
        self.solver = AntidistSolver({"gap_tolerance": self.config["gap_tolerance"]})

        self.stats: Dict[str, int] = {}
        self._stats_lock = threading.Lock()

    def _count(self, method: str) -> None:
        with self._stats_lock:
            self.stats[method] = self.stats.get(method, 0) + 1

    def _certified(self, method: str) -> TupleCertificate:
        self._count(method)
        return TupleCertificate(antidist=True, a_q=1.0, method=method, omega=0.0)

    def resolve(self, states: Sequence[PureState]) -> TupleCertificate:
        """ConvergenceError 原样抛出，由调用方决定如何降级"""
        states = list(states)
        n = len(states)
        d = common_dimension(states)

        if n == 3 and d == 2:
            if qubit_triple_antidist(*states):
                return self._certified("qubit-geometry")
            return self.solve_sdp(states)
        if has_orthogonal_pair(states):
            return self._certified("orthogonal-pair")
        if n == 3 and caves_for_states(*states):
            return self._certified("caves")
        if n >= 3 and johnston_criterion(states):
            return self._certified("johnston")
        if n == 2:
            omega = pair_overlap_pure(states[0], states[1])
            self._count("pair-closed-form")
            antidist = omega <= self.perfect_threshold
            return TupleCertificate(
                antidist=antidist,
                a_q=1.0 - omega / 2.0,
                method="pair-closed-form",
                omega=0.0 if antidist else omega,
            )
        return self.solve_sdp(states)

    def solve_sdp(self, states: Sequence[PureState]) -> TupleCertificate:
        result = self.solver.solve(states)
        self._count("sdp")
        antidist = (
            result.primal_value <= self.perfect_threshold
            and result.dual_value <= self.perfect_threshold
        )
        omega = min(1.0, max(0.0, result.primal_value))
        return TupleCertificate(
            antidist=antidist,
            a_q=result.a_q,
            method="sdp",
            omega=0.0 if antidist else omega,
            verified_a_q=result.a_q,
        )

    def resolve_safe(self, states: Sequence[PureState]) -> TupleCertificate:
        """求解器不收敛时退化为保守上界，method 标记为 unconverged"""
        try:
            return self.resolve(states)
        except ConvergenceError as e:
            omega = min(1.0, max(0.0, e.best_primal))
            self.logger.warning(f"元组 SDP 未收敛，使用保守上界 ω ≤ {omega:.6g}: {e.message}")
            self._count(UNCONVERGED)
            return TupleCertificate(
                antidist=False,
                a_q=1.0 - omega / len(states),
                method=UNCONVERGED,
                omega=omega,
            )

    def resolve_many(self, tuples: Sequence[Sequence[PureState]]) -> List[TupleCertificate]:
        """顺序与输入一致；max_workers > 1 时并行"""
        if self.max_workers > 1 and len(tuples) > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                return list(pool.map(self.resolve_safe, tuples))
        return [self.resolve_safe(t) for t in tuples]
