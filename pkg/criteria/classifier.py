"""
分类引擎
由量子重叠 ω_Q 与分解上界 ω_E ≤ ... 判定制备集合的认知解释类别
"""

import json
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from antidist.sdp import AntidistSolver
from config.module_config import CLASSIFY_CONFIG
from ks_model.model import maximally_mixed_qubit_set
from quantum.exceptions import ConvergenceError, StructuralError
from quantum.states import MixedPreparation
from .decomposition import combine_terms, decomposition_prefactor, enumerate_tuples, validate_preparations
from .tuple_resolver import UNCONVERGED, TupleCertificate, TupleResolver


class Category(Enum):
    """分类结果"""
    CERTIFIED_FULLY_NON_EPISTEMIC = "CertifiedFullyNonEpistemic"
    CERTIFIED_NON_EPISTEMIC = "CertifiedNonEpistemic"
    NON_MAXIMALLY_EPISTEMIC_WITNESS = "NonMaximallyEpistemicWitness"
    INCONCLUSIVE = "Inconclusive"
    ORTHOGONAL_TRIVIAL = "OrthogonalTrivial"


CATEGORY_TOLERANCE = CLASSIFY_CONFIG["category_tolerance"]


@dataclass(frozen=True)
class ClassificationReport:
    """分类报告"""

    omega_q: float
    omega_e_upper: float
    tuple_certificates: Dict[Tuple[int, ...], TupleCertificate]
    category: Category
    a_q: float = 1.0
    diagnostics: Tuple[str, ...] = ()
    weight_approximation: float = 0.0
    preparation_contextual: bool = False
    fully_contextual: bool = False

    def __post_init__(self):
        tol = CATEGORY_TOLERANCE
        checks = {
            Category.CERTIFIED_FULLY_NON_EPISTEMIC: self.omega_e_upper <= tol and self.omega_q >= 1 - tol,
            Category.CERTIFIED_NON_EPISTEMIC: self.omega_e_upper <= tol and self.omega_q > tol,
            Category.NON_MAXIMALLY_EPISTEMIC_WITNESS: self.omega_e_upper < self.omega_q - tol,
            Category.ORTHOGONAL_TRIVIAL: self.omega_q <= tol,
        }
        if not checks.get(self.category, True):
            raise StructuralError(
                f"类别 {self.category.value} 与 ω_Q={self.omega_q!r}, ω_E上界={self.omega_e_upper!r} 不符"
            )
        if not 0.0 <= self.omega_q <= 1.0 or self.omega_e_upper < 0.0:
            raise StructuralError(f"重叠超出范围: ω_Q={self.omega_q!r}, ω_E上界={self.omega_e_upper!r}")

    @property
    def is_certified(self) -> bool:
        return self.category in (
            Category.CERTIFIED_FULLY_NON_EPISTEMIC,
            Category.CERTIFIED_NON_EPISTEMIC,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "category": self.category.value,
            "omega_q": self.omega_q,
            "omega_e_upper": self.omega_e_upper,
            "a_q": self.a_q,
            "weight_approximation": self.weight_approximation,
            "preparation_contextual": self.preparation_contextual,
            "fully_contextual": self.fully_contextual,
            "diagnostics": list(self.diagnostics),
            "tuple_certificates": [
                {"indices": list(indices), **cert.to_dict()}
                for indices, cert in sorted(self.tuple_certificates.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClassificationReport":
        certificates = {}
        for entry in data.get("tuple_certificates", []):
            entry = dict(entry)
            indices = tuple(int(i) for i in entry.pop("indices"))
            certificates[indices] = TupleCertificate.from_dict(entry)
        return cls(
            omega_q=float(data["omega_q"]),
            omega_e_upper=float(data["omega_e_upper"]),
            tuple_certificates=certificates,
            category=Category(data["category"]),
            a_q=float(data.get("a_q", 1.0)),
            diagnostics=tuple(data.get("diagnostics", [])),
            weight_approximation=float(data.get("weight_approximation", 0.0)),
            preparation_contextual=bool(data.get("preparation_contextual", False)),
            fully_contextual=bool(data.get("fully_contextual", False)),
        )


def decide_category(omega_q: float, omega_e_upper: float, degraded: bool, tol: float = CATEGORY_TOLERANCE) -> Category:
    if degraded:
        return Category.INCONCLUSIVE
    if omega_q <= tol:
        return Category.ORTHOGONAL_TRIVIAL
    if omega_e_upper <= tol:
        if omega_q >= 1.0 - tol:
            return Category.CERTIFIED_FULLY_NON_EPISTEMIC
        return Category.CERTIFIED_NON_EPISTEMIC
    if omega_e_upper < omega_q - tol:
        return Category.NON_MAXIMALLY_EPISTEMIC_WITNESS
    return Category.INCONCLUSIVE


class ClassificationEngine:
    """分类引擎 - 组合 SDP、快速判据与分解上界"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = {**CLASSIFY_CONFIG, **(config or {})}
        self.logger = logging.getLogger(__name__)

        self.tolerance = self.config["category_tolerance"]
        self.max_tuples = self.config["max_tuples"]
        self.spot_checks = self.config.get("spot_checks", 0)
        self.solver = AntidistSolver({"gap_tolerance": self.config["gap_tolerance"]})
        self.resolver = TupleResolver(self.config)

        # 统计信息
        self.stats = {
            "classifications": 0,
            "certified": 0,
            "inconclusive": 0,
        }

    def classify(self, preps: Sequence[MixedPreparation]) -> ClassificationReport:
        validate_preparations(preps)
        n = len(preps)
        diagnostics: List[str] = []
        degraded = False
        self.stats["classifications"] += 1

        weight_approximation = max(p.approximation_error for p in preps)
        if weight_approximation > 0:
            diagnostics.append(f"权重经有理近似，最大误差 {weight_approximation:.3e}")

        # 混合态的量子重叠
        try:
            result = self.solver.solve([p.density for p in preps])
            omega_q = min(1.0, max(0.0, result.primal_value))
            a_q = result.a_q
        except ConvergenceError as e:
            degraded = True
            omega_q = min(1.0, max(0.0, e.best_primal)) if np.isfinite(e.best_primal) else 1.0
            a_q = 1.0 - omega_q / n
            diagnostics.append(f"混合态 SDP 未收敛: {e.message}")

        # 纯态元组的分解上界
        terms = enumerate_tuples(preps, self.max_tuples)
        certificates = self.resolver.resolve_many([t.states for t in terms])
        certificates = self._spot_check(terms, certificates, diagnostics)
        if any(c.method == UNCONVERGED for c in certificates):
            degraded = True
            diagnostics.append("部分元组 SDP 未收敛，已用保守上界")
        if any(c.verified_a_q is not None and c.antidist and c.verified_a_q < 1.0 - self.tolerance
               for c in certificates):
            degraded = True
            diagnostics.append("快速判据与 SDP 抽查结果不一致")
        omega_e_upper = combine_terms(preps, terms, [c.omega for c in certificates])

        if maximally_mixed_qubit_set(preps):
            diagnostics.append("全部为最大混合的量子比特制备: KS 模型给出正的认知重叠，不可能是非认知的")

        category = decide_category(omega_q, omega_e_upper, degraded, self.tolerance)
        contextual = (
            n == 2 and not degraded
            and omega_q >= 1.0 - self.tolerance
            and omega_e_upper < 1.0 - self.tolerance
        )
        report = ClassificationReport(
            omega_q=omega_q,
            omega_e_upper=omega_e_upper,
            tuple_certificates={t.indices: c for t, c in zip(terms, certificates)},
            category=category,
            a_q=a_q,
            diagnostics=tuple(diagnostics),
            weight_approximation=weight_approximation,
            preparation_contextual=contextual,
            fully_contextual=contextual and category == Category.CERTIFIED_FULLY_NON_EPISTEMIC,
        )

        if report.is_certified:
            self.stats["certified"] += 1
        elif category == Category.INCONCLUSIVE:
            self.stats["inconclusive"] += 1
        self.logger.info(
            f"分类完成: {category.value}, ω_Q={omega_q:.6f}, ω_E上界={omega_e_upper:.6g}, "
            f"元组 {len(terms)} 个 (前因子 {decomposition_prefactor(preps)}), 判定方法 {self.resolver.stats}"
        )
        return report

    def _spot_check(self, terms, certificates: List[TupleCertificate], diagnostics: List[str]) -> List[TupleCertificate]:
        """对快速判据给出的证书等间隔抽查 SDP"""
        fast = [i for i, c in enumerate(certificates) if c.antidist and c.verified_a_q is None]
        if not fast or self.spot_checks <= 0:
            return certificates
        picks = sorted({fast[int(k)] for k in np.linspace(0, len(fast) - 1, min(self.spot_checks, len(fast)))})
        checked = list(certificates)
        for i in picks:
            try:
                result = self.solver.solve(terms[i].states)
            except ConvergenceError as e:
                diagnostics.append(f"元组 {terms[i].indices} 抽查未收敛: {e.message}")
                continue
            checked[i] = TupleCertificate(
                antidist=certificates[i].antidist,
                a_q=certificates[i].a_q,
                method=certificates[i].method,
                omega=certificates[i].omega,
                verified_a_q=result.a_q,
            )
        return checked


def classify(preps: Sequence[MixedPreparation], config: Optional[Dict[str, Any]] = None) -> ClassificationReport:
    """对混合制备集合分类"""
    return ClassificationEngine(config).classify(preps)
