"""
半球、大圆与量子比特三元组判据的测试
"""

import math

import numpy as np
import pytest

from antidist.sdp import antidist_sdp
from geometry.hemisphere import great_circle_test, hemisphere_witness
from geometry.nonepistemic import theorem3_nonepistemic_test
from geometry.qubit_triples import (
    antidist_gammas,
    antidist_povm_qubit,
    canonical_frame,
    qubit_triple_antidist,
    triple_overlaps,
    triple_violations,
)
from quantum.bloch import bloch_from_qubit
from quantum.exceptions import DimensionMismatchError, DomainError, RangeError, StructuralError
from quantum.random_states import make_rng, qubit_from_angles, random_great_circle_triple, random_pure_state
from quantum.states import BlochVector, PureState

X = BlochVector(1.0, 0.0, 0.0)
Y = BlochVector(0.0, 1.0, 0.0)
Z = BlochVector(0.0, 0.0, 1.0)
NEG_Z = BlochVector(0.0, 0.0, -1.0)


def angle_margin(p1, p2, p3) -> float:
    angles = [math.acos(min(1.0, x)) for x in triple_overlaps(p1, p2, p3)]
    return min(angles[0] + angles[1], angles[0] + angles[2], angles[1] + angles[2]) - 0.5 * math.pi


def coplanarity(p1, p2, p3) -> float:
    return abs(float(np.linalg.det(np.array([bloch_from_qubit(p).as_array() for p in (p1, p2, p3)]))))


class TestHemisphere:
    def test_two_orthogonal_axes(self):
        w = hemisphere_witness([Z, X])
        assert w is not None
        assert w.dot(Z) > 0 and w.dot(X) > 0

    def test_antipodal_pair_has_no_hemisphere(self):
        assert hemisphere_witness([Z, NEG_Z]) is None

    def test_three_axes(self):
        w = hemisphere_witness([X, Y, Z])
        assert w is not None
        assert min(w.dot(v) for v in (X, Y, Z)) > 0

    def test_trine_vectors_balanced(self, trine):
        assert hemisphere_witness([bloch_from_qubit(s) for s in trine]) is None

    def test_witness_is_unit(self):
        w = hemisphere_witness([Z, X, Y])
        assert w.norm == pytest.approx(1.0, abs=1e-12)

    def test_empty_input(self):
        with pytest.raises(RangeError):
            hemisphere_witness([])

    def test_non_unit_vector(self):
        with pytest.raises(StructuralError):
            hemisphere_witness([BlochVector(0.5, 0.0, 0.0)])


class TestGreatCircle:
    def test_coplanar(self):
        assert great_circle_test(Z, X, NEG_Z)

    def test_not_coplanar(self):
        assert not great_circle_test(X, Y, Z)

    def test_random_circle_triples(self, rng):
        for _ in range(50):
            states = random_great_circle_triple(rng)
            assert great_circle_test(*(bloch_from_qubit(s) for s in states))


class TestQubitTriples:
    def test_trine_antidist(self, trine):
        assert triple_overlaps(*trine) == pytest.approx((0.5, 0.5, 0.5))
        assert qubit_triple_antidist(*trine)

    def test_zero_plus_one(self, zero, plus, one):
        assert triple_violations(zero, plus, one) == []

    def test_quarter_circle_fails_angle_conditions(self, zero, plus):
        mid = qubit_from_angles(math.pi / 4, 0.0)
        failed = triple_violations(zero, plus, mid)
        assert "great circle" not in failed
        assert failed
        assert not qubit_triple_antidist(zero, plus, mid)

    def test_off_circle_fails(self, zero, plus):
        y_state = qubit_from_angles(math.pi / 2, math.pi / 2)
        assert "great circle" in triple_violations(zero, plus, y_state)

    def test_requires_qubits(self, zero, plus):
        with pytest.raises(DimensionMismatchError):
            triple_violations(zero, plus, PureState.basis(3, 0))

    def test_canonical_frame_flattens_circle(self, rng):
        states = random_great_circle_triple(rng)
        frame = canonical_frame(*states)
        assert frame.out_of_plane <= 1e-10
        assert frame.rotated[0] == pytest.approx([0.0, 0.0, 1.0], abs=1e-12)
        assert np.allclose(frame.rotation @ frame.rotation.T, np.eye(3), atol=1e-12)


class TestGammaPovm:
    def test_trine_gammas(self, trine):
        assert antidist_gammas(*trine) == pytest.approx((2 / 3, 2 / 3, 2 / 3), abs=1e-12)

    def test_zero_plus_one_gammas(self, zero, plus, one):
        assert antidist_gammas(zero, plus, one) == pytest.approx((1.0, 0.0, 1.0), abs=1e-12)

    def test_trine_povm(self, trine):
        povm = antidist_povm_qubit(*trine)
        assert povm.error_sum([s.density() for s in trine]) == pytest.approx(0.0, abs=1e-9)

    def test_identical_states_rejected(self, zero, one):
        with pytest.raises(DomainError):
            antidist_gammas(zero, zero, one)

    def test_failed_conditions_named(self, zero, plus):
        mid = qubit_from_angles(math.pi / 4, 0.0)
        with pytest.raises(DomainError) as info:
            antidist_povm_qubit(zero, plus, mid)
        assert info.value.details["failed"] == triple_violations(zero, plus, mid)
        assert "acos" in info.value.message

    def test_povm_sound_on_random_circle_triples(self):
        rng = make_rng(3)
        checked = 0
        for _ in range(200):
            states = random_great_circle_triple(rng)
            if angle_margin(*states) < 1e-6 or max(triple_overlaps(*states)) > 1 - 1e-6:
                continue
            gammas = antidist_gammas(*states)
            raw = sum(g * (np.eye(2) - s.projector()) for g, s in zip(gammas, states))
            assert np.allclose(raw, np.eye(2), atol=1e-9)
            povm = antidist_povm_qubit(*states)
            assert povm.error_sum([s.density() for s in states]) <= 1e-9
            checked += 1
        assert checked > 20


class TestAgreementWithSdp:
    def test_small_sample(self):
        rng = make_rng(5)
        for k in range(20):
            states = random_great_circle_triple(rng) if k % 2 else tuple(random_pure_state(rng, 2) for _ in range(3))
            margin = angle_margin(*states)
            if abs(margin) < 1e-2 or (k % 2 == 0 and coplanarity(*states) < 5e-2):
                continue
            perfect = antidist_sdp(list(states)).a_q >= 1.0 - 1e-5
            assert perfect == qubit_triple_antidist(*states)

    @pytest.mark.slow
    def test_large_sample(self):
        rng = make_rng(13)
        for k in range(2000):
            states = random_great_circle_triple(rng) if k < 1000 else tuple(random_pure_state(rng, 2) for _ in range(3))
            if abs(angle_margin(*states)) < 1e-2 or (k >= 1000 and coplanarity(*states) < 5e-2):
                continue
            perfect = antidist_sdp(list(states)).a_q >= 1.0 - 1e-5
            assert perfect == qubit_triple_antidist(*states)


class TestNonEpistemic:
    def test_two_triples_on_one_circle(self, zero, plus, one, minus):
        assert theorem3_nonepistemic_test(zero, plus, one, minus)

    def test_orthogonal_pair_excluded(self, zero, one, plus, minus):
        assert not theorem3_nonepistemic_test(zero, one, plus, minus)

    def test_second_triple_off_circle(self, zero, plus, one):
        y_state = qubit_from_angles(math.pi / 2, math.pi / 2)
        assert not theorem3_nonepistemic_test(zero, plus, one, y_state)
