"""
命名示例的复现: 每个场景给出期望值、计算值以及是否吻合
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from antidist.sdp import antidist_sdp
from criteria.antidist_criteria import caves_for_states, johnston_criterion
from criteria.classifier import Category, classify
from criteria.bounds import corollary5_bound
from criteria.decomposition import enumerate_tuples
from geometry.qubit_triples import antidist_gammas, antidist_povm_qubit, qubit_triple_antidist
from ks_model.model import (
    KsIntegrator,
    hemisphere_positivity,
    ks_overlap_bases_closed,
    theorem6_minimize,
)
from quantum.mub import mub_bases
from quantum.random_states import qubit_from_angles
from quantum.states import MixedPreparation, PureState

logger = logging.getLogger(__name__)

_S2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class ScenarioResult:
    name: str
    expected: Dict[str, Any]
    computed: Dict[str, Any]
    passed: bool
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "expected": self.expected,
            "computed": self.computed,
            "notes": list(self.notes),
        }


def example1_preparations() -> List[MixedPreparation]:
    """ρ1 = |0⟩⟨0|，ρ2 = |+⟩⟨+|，ρ3 = ½(|1⟩⟨1| + |−⟩⟨−|)"""
    zero, one = PureState.basis(2, 0), PureState.basis(2, 1)
    plus = PureState(np.array([_S2, _S2]))
    minus = PureState(np.array([_S2, -_S2]))
    return [
        MixedPreparation.pure(zero),
        MixedPreparation.pure(plus),
        MixedPreparation((one, minus), (1, 1), 2),
    ]


def mub_preparations(d: int, count: int) -> List[MixedPreparation]:
    """每组基的等权混合，即最大混合态的不同分解"""
    return [MixedPreparation.uniform(basis) for basis in mub_bases(d, count)]


def trine_states() -> List[PureState]:
    """Bloch 向量在 z-x 平面内两两相差 2π/3"""
    return [qubit_from_angles(theta, 0.0) for theta in (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)]


def _close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol


def run_example1(integrator: KsIntegrator, **_) -> ScenarioResult:
    preps = example1_preparations()
    report = classify(preps)
    ks = integrator.overlap_mixed(preps)
    computed = {
        "a_q": report.a_q,
        "omega_q": report.omega_q,
        "omega_e_upper": report.omega_e_upper,
        "category": report.category.value,
        "certified_tuples": sum(c.antidist for c in report.tuple_certificates.values()),
        "ks_mixed_overlap": ks.to_dict(),
    }
    passed = (
        _close(report.a_q, 0.9613, 1e-3)
        and _close(report.omega_q, 0.1161, 2e-3)
        and report.omega_e_upper == 0.0
        and report.category == Category.CERTIFIED_NON_EPISTEMIC
    )
    return ScenarioResult(
        name="1",
        expected={"a_q": 0.9613, "omega_q": 0.1161, "omega_e_upper": 0.0,
                  "category": Category.CERTIFIED_NON_EPISTEMIC.value},
        computed=computed,
        passed=passed,
        notes=["KS 模型中 ρ3 的认知态与 ρ1、ρ2 的公共支撑不相交，混合重叠为 0"],
    )


def _mub_example(name: str, d: int, count: int, criterion: Callable, criterion_name: str) -> ScenarioResult:
    preps = mub_preparations(d, count)
    report = classify(preps)
    terms = enumerate_tuples(preps)
    passing = sum(bool(criterion(t.states)) for t in terms)
    spot_checked = [c.verified_a_q for c in report.tuple_certificates.values() if c.verified_a_q is not None]
    computed = {
        "omega_q": report.omega_q,
        "omega_e_upper": report.omega_e_upper,
        "category": report.category.value,
        "tuples": len(terms),
        f"{criterion_name}_passing": passing,
        "spot_checked": len(spot_checked),
        "min_spot_checked_a_q": min(spot_checked) if spot_checked else None,
    }
    passed = (
        report.category == Category.CERTIFIED_FULLY_NON_EPISTEMIC
        and _close(report.omega_q, 1.0, 1e-6)
        and passing == len(terms)
    )
    return ScenarioResult(
        name=name,
        expected={"omega_q": 1.0, "omega_e_upper": 0.0, "tuples": len(terms),
                  "category": Category.CERTIFIED_FULLY_NON_EPISTEMIC.value},
        computed=computed,
        passed=passed,
    )


def run_example2(**_) -> ScenarioResult:
    """d = 3 的四组 MUB"""
    return _mub_example("2", 3, 4, johnston_criterion, "johnston")


def run_example3(**_) -> ScenarioResult:
    """d = 5 的三组 MUB"""
    return _mub_example("3", 5, 3, lambda states: caves_for_states(*states), "caves")


def run_theorem6(integrator: KsIntegrator, **_) -> ScenarioResult:
    """两组量子比特基的最大混合制备: KS 重叠下界 2 − √2 在 MUB 时取到"""
    floor = 2.0 - math.sqrt(2.0)
    minimum = theorem6_minimize()
    z_basis, x_basis = mub_preparations(2, 2)
    ks = integrator.overlap_mixed([z_basis, x_basis])
    closed = ks_overlap_bases_closed(z_basis, x_basis)
    computed = {
        "minimum": minimum.to_dict(),
        "ks_mixed_overlap": ks.to_dict(),
        "closed_form": closed,
        "corollary5_bound": corollary5_bound(2),
    }
    passed = (
        _close(minimum.value, floor, 1e-6)
        and _close(minimum.c1_abs, _S2, 1e-3)
        and ks.within(floor, sigmas=5)
        and _close(closed, floor, 1e-12)
    )
    return ScenarioResult(
        name="theorem6",
        expected={"minimum": floor, "c1_abs": _S2, "ks_mixed_overlap": floor, "corollary5_bound": floor},
        computed=computed,
        passed=passed,
    )


def run_trine(integrator: KsIntegrator, **_) -> ScenarioResult:
    states = trine_states()
    sdp = antidist_sdp(states)
    povm = antidist_povm_qubit(*states)
    ks = integrator.overlap_pure(states)
    computed = {
        "geometry_antidist": qubit_triple_antidist(*states),
        "gammas": list(antidist_gammas(*states)),
        "povm_error_sum": povm.error_sum([s.density() for s in states]),
        "sdp_a_q": sdp.a_q,
        "hemisphere_positivity": hemisphere_positivity(states),
        "ks_overlap": ks.to_dict(),
    }
    passed = (
        computed["geometry_antidist"]
        and all(_close(g, 2.0 / 3.0, 1e-10) for g in computed["gammas"])
        and computed["povm_error_sum"] <= 1e-9
        and _close(sdp.a_q, 1.0, 1e-6)
        and not computed["hemisphere_positivity"]
        and ks.estimate <= 1e-12
    )
    return ScenarioResult(
        name="trine",
        expected={"geometry_antidist": True, "gammas": [2.0 / 3.0] * 3, "sdp_a_q": 1.0,
                  "hemisphere_positivity": False, "ks_overlap": 0.0},
        computed=computed,
        passed=passed,
        notes=["三个 Bloch 向量不在任何开半球内，KS 纯态重叠恒为 0"],
    )


SCENARIOS: Dict[str, Callable[..., ScenarioResult]] = {
    "1": run_example1,
    "2": run_example2,
    "3": run_example3,
    "theorem6": run_theorem6,
    "trine": run_trine,
}


def run_scenario(name: str, samples: Optional[int] = None, seed: Optional[int] = None) -> ScenarioResult:
    integrator = KsIntegrator({k: v for k, v in (("samples", samples), ("seed", seed)) if v is not None})
    result = SCENARIOS[name](integrator=integrator)
    log = logger.info if result.passed else logger.warning
    log(f"示例 {name}: {'吻合' if result.passed else '不吻合'}")
    return result
