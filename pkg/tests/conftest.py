"""
测试公共夹具
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from quantum.mub import mub_bases
from quantum.random_states import make_rng
from quantum.states import MixedPreparation, PureState

S2 = 1.0 / math.sqrt(2.0)


@pytest.fixture
def rng() -> np.random.Generator:
    return make_rng(20240917)


@pytest.fixture
def zero() -> PureState:
    return PureState.basis(2, 0)


@pytest.fixture
def one() -> PureState:
    return PureState.basis(2, 1)


@pytest.fixture
def plus() -> PureState:
    return PureState(np.array([S2, S2]))


@pytest.fixture
def minus() -> PureState:
    return PureState(np.array([S2, -S2]))


@pytest.fixture
def example1_preps(zero, one, plus, minus):
    """|0⟩、|+⟩ 与 ½(|1⟩⟨1| + |−⟩⟨−|)"""
    return [
        MixedPreparation.pure(zero),
        MixedPreparation.pure(plus),
        MixedPreparation((one, minus), (1, 1), 2),
    ]


@pytest.fixture
def trine():
    angles = (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)
    return [PureState(np.array([math.cos(t / 2.0), math.sin(t / 2.0)])) for t in angles]


def mub_preparations(d: int, count: int):
    return [MixedPreparation.uniform(b) for b in mub_bases(d, count)]
