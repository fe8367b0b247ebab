"""
量子比特几何模块
半球判据、大圆判据、三元组完美反区分判定与 γ-POVM 构造
"""

from .hemisphere import great_circle_test, hemisphere_witness
from .qubit_triples import (
    CanonicalFrame,
    antidist_gammas,
    antidist_povm_qubit,
    canonical_frame,
    qubit_triple_antidist,
    triple_violations,
)
from .nonepistemic import theorem3_nonepistemic_test

__all__ = [
    "great_circle_test",
    "hemisphere_witness",
    "CanonicalFrame",
    "antidist_gammas",
    "antidist_povm_qubit",
    "canonical_frame",
    "qubit_triple_antidist",
    "triple_violations",
    "theorem3_nonepistemic_test",
]
