"""
反区分度半正定规划

原问题: min Σ_x Tr(ρ_x M_x)，约束 M_x ⪰ 0, Σ_x M_x = I
对偶:   max Tr(Y)，约束 Y ⪯ ρ_x

两个问题分别求解。原问题的 POVM 经修复后严格完备，对偶 Y 向下平移到严格可行，
因此返回的 gap 是可信的最优性证书。
"""

import json
import logging
import threading
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import cvxpy as cp
import numpy as np

from config.module_config import SDP_CONFIG
from config.settings import settings
from quantum.codec import decode_matrix, encode_matrix
from quantum.exceptions import (
    CapabilityError,
    ConvergenceError,
    RangeError,
    StructuralError,
)
from quantum.linalg import hermitize, max_eigenvalue, min_eigenvalue
from quantum.states import DensityMatrix, Povm, as_density_matrices, common_dimension, repair_povm


@dataclass(frozen=True, eq=False)
class SdpResult:
    """反区分度求解结果与对偶证书"""

    a_q: float
    povm: Povm
    dual_certificate: np.ndarray
    primal_value: float
    dual_value: float
    gap: float
    solver: str = ""

    @property
    def n(self) -> int:
        return self.povm.n

    @property
    def omega_q(self) -> float:
        return self.n * (1.0 - self.a_q)

    def verify(self, states: Sequence[DensityMatrix], gap_tolerance: Optional[float] = None) -> bool:
        """对照输入重新检查两个可行性证书与对偶间隙"""
        gap_tolerance = gap_tolerance or settings.SDP.GAP_TOLERANCE
        rhos = as_density_matrices(states)
        if len(rhos) != self.n:
            return False
        tol = settings.TOLERANCES.DUAL_FEASIBILITY
        dual_ok = all(
            min_eigenvalue(rho.entries - self.dual_certificate) >= -tol for rho in rhos
        )
        primal = self.povm.error_sum(rhos)
        return (
            dual_ok
            and abs(primal - self.primal_value) <= tol
            and -tol <= self.gap <= gap_tolerance
            and abs(self.a_q - (1.0 - self.primal_value / self.n)) <= 1e-12
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a_q": self.a_q,
            "omega_q": self.omega_q,
            "primal_value": self.primal_value,
            "dual_value": self.dual_value,
            "gap": self.gap,
            "solver": self.solver,
            "povm": [encode_matrix(e) for e in self.povm.effects],
            "dual_certificate": encode_matrix(self.dual_certificate),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SdpResult":
        return cls(
            a_q=float(data["a_q"]),
            povm=Povm(tuple(decode_matrix(e) for e in data["povm"])),
            dual_certificate=decode_matrix(data["dual_certificate"]),
            primal_value=float(data["primal_value"]),
            dual_value=float(data["dual_value"]),
            gap=float(data["gap"]),
            solver=data.get("solver", ""),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SdpResult):
            return NotImplemented
        return (
            (self.a_q, self.primal_value, self.dual_value, self.gap, self.solver)
            == (other.a_q, other.primal_value, other.dual_value, other.gap, other.solver)
            and self.povm.n == other.povm.n
            and all(np.array_equal(a, b) for a, b in zip(self.povm.effects, other.povm.effects))
            and np.array_equal(self.dual_certificate, other.dual_certificate)
        )

    __hash__ = None


class AntidistSolver:
    """反区分度 SDP 求解器，按配置的求解器链逐个尝试"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = {**SDP_CONFIG, **(config or {})}
        self.logger = logging.getLogger(__name__)

        self.gap_tolerance = self.config["gap_tolerance"]
        self.solvers: List[str] = list(self.config["solvers"])
        self.solver_options: Dict[str, Dict[str, Any]] = self.config["solver_options"]
        self.max_dimension = self.config["max_dimension"]

        # 统计信息
        self.stats = {
            "solves": 0,
            "fallbacks": 0,
            "failures": 0,
        }
        self._stats_lock = threading.Lock()

    def _count(self, key: str) -> None:
        with self._stats_lock:
            self.stats[key] += 1

    def available_solvers(self) -> List[str]:
        installed = set(cp.installed_solvers())
        return [name for name in self.solvers if name in installed]

    def solve(self, states: Sequence, gap_tolerance: Optional[float] = None) -> SdpResult:
        """求解反区分度，返回带对偶证书的结果"""
        gap_tolerance = self.gap_tolerance if gap_tolerance is None else gap_tolerance
        if gap_tolerance <= 0:
            raise RangeError(f"gap_tolerance 必须为正，实际 {gap_tolerance}")

        rhos = as_density_matrices(states)
        n = len(rhos)
        if n < 2:
            raise RangeError(f"反区分度至少需要 2 个态，实际 {n}")
        d = common_dimension(rhos)
        if d > self.max_dimension:
            self.logger.warning(f"维数 {d} 超过 {self.max_dimension}，求解可能很慢")

        solvers = self.available_solvers()
        if not solvers:
            raise CapabilityError(f"没有可用的 SDP 求解器: {self.solvers}")

        self._count("solves")
        best_primal: Optional[Tuple[float, Povm, str]] = None
        best_dual: Optional[Tuple[float, np.ndarray, str]] = None
        solver_log: Dict[str, Any] = {}

        for attempt, name in enumerate(solvers):
            if attempt > 0:
                self._count("fallbacks")
                self.logger.warning(f"对偶间隙未达到 {gap_tolerance:.1e}，改用求解器 {name}")

            options = self.solver_options.get(name, {})
            primal = self._solve_primal(rhos, name, options, solver_log)
            dual = self._solve_dual(rhos, name, options, solver_log)

            if primal is not None and (best_primal is None or primal[0] < best_primal[0]):
                best_primal = (primal[0], primal[1], name)
            if dual is not None and (best_dual is None or dual[0] > best_dual[0]):
                best_dual = (dual[0], dual[1], name)

            if best_primal is not None and best_dual is not None:
                gap = best_primal[0] - best_dual[0]
                solver_log[name]["gap"] = gap
                if gap <= gap_tolerance:
                    return self._build_result(n, best_primal, best_dual)

        self._count("failures")
        raise ConvergenceError(
            f"SDP 未能达到对偶间隙 {gap_tolerance:.1e}",
            best_primal=best_primal[0] if best_primal else float("inf"),
            best_dual=best_dual[0] if best_dual else float("-inf"),
            solver_log=solver_log,
        )

    def _build_result(self, n: int, primal, dual) -> SdpResult:
        primal_value, povm, primal_solver = primal
        dual_value, y, dual_solver = dual
        solver = primal_solver if primal_solver == dual_solver else f"{primal_solver}/{dual_solver}"
        result = SdpResult(
            a_q=1.0 - primal_value / n,
            povm=povm,
            dual_certificate=y,
            primal_value=primal_value,
            dual_value=dual_value,
            gap=primal_value - dual_value,
            solver=solver,
        )
        self.logger.debug(
            f"SDP 完成: n={n}, A_Q={result.a_q:.9f}, gap={result.gap:.2e}, solver={solver}"
        )
        return result

    def _solve_primal(self, rhos, name, options, solver_log) -> Optional[Tuple[float, Povm]]:
        d = rhos[0].dim
        effects = [cp.Variable((d, d), hermitian=True) for _ in rhos]
        constraints = [m >> 0 for m in effects]
        constraints.append(sum(effects) == np.eye(d))
        objective = cp.Minimize(
            cp.real(sum(cp.trace(rho.entries @ m) for rho, m in zip(rhos, effects)))
        )
        problem = cp.Problem(objective, constraints)

        status = self._run(problem, name, options)
        solver_log.setdefault(name, {})["primal_status"] = status
        if status not in (cp.OPTIMAL, cp.OPTIMAL_INACCURATE) or any(m.value is None for m in effects):
            return None

        try:
            povm = repair_povm([m.value for m in effects])
        except (StructuralError, np.linalg.LinAlgError) as e:
            self.logger.warning(f"原问题解修复失败 ({name}): {e}")
            return None
        return povm.error_sum(rhos), povm

    def _solve_dual(self, rhos, name, options, solver_log) -> Optional[Tuple[float, np.ndarray]]:
        d = rhos[0].dim
        y = cp.Variable((d, d), hermitian=True)
        slacks = [cp.Variable((d, d), hermitian=True) for _ in rhos]
        constraints = []
        for rho, s in zip(rhos, slacks):
            constraints += [s >> 0, s == rho.entries - y]
        problem = cp.Problem(cp.Maximize(cp.real(cp.trace(y))), constraints)

        status = self._run(problem, name, options)
        solver_log.setdefault(name, {})["dual_status"] = status
        if status not in (cp.OPTIMAL, cp.OPTIMAL_INACCURATE) or y.value is None:
            return None

        # 平移 Y 使 Y ⪯ ρ_x 严格成立
        y_value = hermitize(y.value)
        violation = max(max_eigenvalue(y_value - rho.entries) for rho in rhos)
        if violation > 0:
            y_value = y_value - violation * np.eye(d)
        return float(np.real(np.trace(y_value))), y_value

    def _run(self, problem: cp.Problem, name: str, options: Dict[str, Any]) -> str:
        try:
            problem.solve(solver=name, **options)
        except cp.error.SolverError as e:
            self.logger.warning(f"求解器 {name} 失败: {e}")
            return "solver_error"
        return problem.status


def antidist_sdp(states: Sequence, gap_tolerance: Optional[float] = None) -> SdpResult:
    """计算 A_Q^[n]、最优 POVM 与对偶证书"""
    return AntidistSolver().solve(states, gap_tolerance)
