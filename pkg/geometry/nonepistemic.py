"""
两个纯态加一个两分量混合制备的非认知判据
"""

from config.settings import settings
from quantum.measures import overlap_abs
from quantum.states import PureState
from .qubit_triples import qubit_triple_antidist


def theorem3_nonepistemic_test(psi: PureState, phi: PureState, chi1: PureState, chi2: PureState) -> bool:
    """
    {ψ, φ, χ1} 与 {ψ, φ, χ2} 都可完美反区分且 ψ、φ 不正交时为真

    两个三元组各自共大圆并共享不对径的 ψ、φ，因而四个态必在同一大圆上。
    """
    return (
        overlap_abs(psi, phi) > settings.TOLERANCES.TUPLE_ZERO
        and qubit_triple_antidist(psi, phi, chi1)
        and qubit_triple_antidist(psi, phi, chi2)
    )
