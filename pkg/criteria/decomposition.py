"""
分解上界: 混合制备的认知重叠由其纯态分解的元组重叠控制

ω_E(ρ_1..ρ_n) ≤ lcm(β)^(n−1) / Π β_k × Σ_{i_1..i_n} (Π_k α_{i_k|k}) ω(ψ_{i_1|1}, …, ψ_{i_n|n})
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from config.settings import settings
from quantum.exceptions import DomainError, RangeError, StructuralError
from quantum.states import MixedPreparation, PureState, common_dimension

logger = logging.getLogger(__name__)

TupleOverlap = Callable[[Sequence[PureState]], float]


@dataclass(frozen=True)
class TupleTerm:
    """一个纯态元组及其整数权重 Π α"""

    indices: Tuple[int, ...]
    weight: int
    states: Tuple[PureState, ...]


def validate_preparations(preps: Sequence[MixedPreparation], minimum: int = 2) -> int:
    """检查类型与维数，返回公共维数"""
    if len(preps) < minimum:
        raise RangeError(f"至少需要 {minimum} 个混合制备，实际 {len(preps)}")
    for k, prep in enumerate(preps):
        if not isinstance(prep, MixedPreparation):
            raise StructuralError(f"第 {k} 个输入不是 MixedPreparation: {type(prep).__name__}")
    return common_dimension(preps, "混合制备")


def count_tuples(preps: Sequence[MixedPreparation]) -> int:
    return math.prod(sum(1 for a in p.alphas if a) for p in preps)


def enumerate_tuples(preps: Sequence[MixedPreparation], max_tuples: Optional[int] = None) -> List[TupleTerm]:
    """枚举权重非零的纯态元组，超过上限时报错"""
    max_tuples = settings.CLASSIFY.MAX_TUPLES if max_tuples is None else max_tuples
    total = count_tuples(preps)
    if total > max_tuples:
        raise RangeError(
            f"元组数 {total} 超过上限 {max_tuples}，可显式提高 max_tuples",
            {"tuples": total, "max_tuples": max_tuples},
        )

    supports = [[i for i, a in enumerate(p.alphas) if a] for p in preps]
    terms = []
    for indices in itertools.product(*supports):
        weight = math.prod(p.alphas[i] for p, i in zip(preps, indices))
        states = tuple(p.pures[i] for p, i in zip(preps, indices))
        terms.append(TupleTerm(indices=tuple(indices), weight=weight, states=states))
    return terms


def decomposition_prefactor(preps: Sequence[MixedPreparation]) -> Fraction:
    """lcm(β_1..β_n)^(n−1) / Π β_k，精确有理数"""
    betas = [p.beta for p in preps]
    return Fraction(math.lcm(*betas) ** (len(betas) - 1), math.prod(betas))


def combine_terms(preps: Sequence[MixedPreparation], terms: Sequence[TupleTerm], overlaps: Sequence[float]) -> float:
    """按输入顺序做确定性的加权求和"""
    total = math.fsum(term.weight * value for term, value in zip(terms, overlaps))
    return float(decomposition_prefactor(preps) * Fraction(total))


def theorem1_bound(
    preps: Sequence[MixedPreparation],
    tuple_overlap: TupleOverlap,
    max_tuples: Optional[int] = None,
) -> float:
    validate_preparations(preps)
    terms = enumerate_tuples(preps, max_tuples)
    overlaps = [float(tuple_overlap(term.states)) for term in terms]
    bound = combine_terms(preps, terms, overlaps)
    logger.debug(f"分解上界: {len(terms)} 个元组, 前因子 {decomposition_prefactor(preps)}, 结果 {bound:.12g}")
    return bound


def uniform_decomposition_bound(
    preps: Sequence[MixedPreparation],
    tuple_antidist: Callable[[Sequence[PureState]], float],
    max_tuples: Optional[int] = None,
) -> float:
    """
    每个制备都是 d 个纯态的等权混合时: ω_E ≤ (n/d) Σ_tuples (1 − A_Q)

    tuple_antidist 返回元组的 A_Q^[n]。
    """
    d = validate_preparations(preps)
    for k, prep in enumerate(preps):
        if prep.beta != d or prep.size != d or any(a != 1 for a in prep.alphas):
            raise DomainError(f"第 {k} 个制备不是 {d} 个纯态的等权混合")
    n = len(preps)
    terms = enumerate_tuples(preps, max_tuples)
    deficit = math.fsum(1.0 - float(tuple_antidist(t.states)) for t in terms)
    return n * deficit / d
