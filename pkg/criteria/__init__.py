"""
判据与分类模块
分解上界、组合引理、完美反区分判据、闭式上界、S 见证与分类引擎
"""

from .lemma import Lemma1Result, lemma1_check
from .antidist_criteria import (
    caves_criterion,
    caves_for_states,
    has_orthogonal_pair,
    johnston_criterion,
    johnston_threshold,
)
from .decomposition import (
    TupleTerm,
    decomposition_prefactor,
    enumerate_tuples,
    theorem1_bound,
    uniform_decomposition_bound,
)
from .tuple_resolver import TupleCertificate, TupleResolver
from .bounds import (
    corollary5_bound,
    lewis_threshold,
    mub_pair_ratio,
    psi_epistemic_ratio_bound,
    theorem5_bound,
    theorem7_avg_ratio_bound,
    theorem8_bound,
)
from .witness import (
    SWitnessResult,
    classical_parity_encoding,
    optimal_parity_oblivious_config,
    s_witness,
)
from .classifier import Category, ClassificationEngine, ClassificationReport, classify

__all__ = [
    "Lemma1Result",
    "lemma1_check",
    "caves_criterion",
    "caves_for_states",
    "has_orthogonal_pair",
    "johnston_criterion",
    "johnston_threshold",
    "TupleTerm",
    "decomposition_prefactor",
    "enumerate_tuples",
    "theorem1_bound",
    "uniform_decomposition_bound",
    "TupleCertificate",
    "TupleResolver",
    "corollary5_bound",
    "lewis_threshold",
    "mub_pair_ratio",
    "psi_epistemic_ratio_bound",
    "theorem5_bound",
    "theorem7_avg_ratio_bound",
    "theorem8_bound",
    "SWitnessResult",
    "classical_parity_encoding",
    "optimal_parity_oblivious_config",
    "s_witness",
    "Category",
    "ClassificationEngine",
    "ClassificationReport",
    "classify",
]
