"""
组合不等式、反区分判据、分解上界、闭式界、S 见证与分类引擎的测试
"""

import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from antidist.sdp import antidist_sdp
from criteria.antidist_criteria import (
    caves_criterion,
    caves_for_states,
    has_orthogonal_pair,
    johnston_criterion,
    johnston_threshold,
)
from criteria.bounds import (
    corollary5_bound,
    lewis_threshold,
    mub_pair_ratio,
    psi_epistemic_ratio_bound,
    theorem5_bound,
    theorem7_avg_ratio_bound,
    theorem8_bound,
)
from criteria.classifier import Category, ClassificationEngine, ClassificationReport, classify, decide_category
from criteria.decomposition import (
    decomposition_prefactor,
    enumerate_tuples,
    theorem1_bound,
    uniform_decomposition_bound,
)
from criteria.lemma import lemma1_check, pad_sets
from criteria.tuple_resolver import TupleCertificate, TupleResolver
from criteria.witness import classical_parity_encoding, optimal_parity_oblivious_config, s_witness
from quantum.bloch import qubit_from_bloch
from quantum.exceptions import (
    ConvergenceError,
    DimensionMismatchError,
    DomainError,
    RangeError,
    StructuralError,
    WitnessUndefinedError,
)
from quantum.mub import mub_bases
from quantum.random_states import make_rng, random_pure_state, random_unit_vector
from quantum.states import BlochVector, MixedPreparation, Povm, PureState

from conftest import mub_preparations

S2 = 1.0 / math.sqrt(2.0)

nonnegative = st.one_of(st.just(0.0), st.floats(min_value=0.0, max_value=10.0, allow_nan=False))


def brute_force_rhs(table: np.ndarray) -> float:
    """逐个枚举 (i_1, ..., i_n) 求和"""
    n, r = table.shape
    return math.fsum(min(table[k, idx[k]] for k in range(n)) for idx in product(range(r), repeat=n))


class TestLemma:
    def test_small_example(self):
        result = lemma1_check([[1.0, 2.0], [3.0, 0.0]])
        assert result.lhs == pytest.approx(3.0)
        assert result.rhs == pytest.approx(3.0)
        assert result.holds

    def test_zero_lhs(self):
        result = lemma1_check([[0.0, 0.0], [1.0, 1.0]])
        assert result.lhs == 0.0 and result.rhs == 0.0
        assert result.holds

    def test_ragged_sets_padded(self):
        result = lemma1_check([[1.0], [0.5, 0.5, 0.5]])
        assert result.lhs == pytest.approx(1.0)
        assert result.holds

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            lemma1_check([[1.0, -0.1], [1.0]])

    def test_empty_rejected(self):
        with pytest.raises(RangeError):
            lemma1_check([])

    @hyp_settings(max_examples=200, deadline=None)
    @given(st.lists(st.lists(nonnegative, min_size=1, max_size=4), min_size=1, max_size=4))
    def test_always_holds(self, sets):
        result = lemma1_check(sets)
        assert result.holds
        assert result.rhs == pytest.approx(brute_force_rhs(pad_sets(sets)), abs=1e-9)

    def test_all_ones(self):
        result = lemma1_check([[1.0, 1.0]] * 3)
        assert result.lhs == pytest.approx(2.0)
        assert result.rhs == pytest.approx(8.0)

    def test_complementary_sets(self):
        result = lemma1_check([[1.0, 0.0], [0.0, 1.0]])
        assert result.lhs == pytest.approx(1.0)
        assert result.rhs == pytest.approx(1.0)
        assert result.holds

    @pytest.mark.slow
    def test_brute_force(self):
        rng = make_rng(17)
        for _ in range(10_000):
            n = int(rng.integers(1, 5))
            r = int(rng.integers(1, 6))
            table = rng.uniform(0.0, 10.0, size=(n, r))
            # 一部分实例把整组置零，检验左端为 0 的情形
            if rng.uniform() < 0.2:
                table[int(rng.integers(n))] = 0.0
            else:
                table *= rng.uniform(size=(n, r)) > 0.3
            result = lemma1_check(table.tolist())
            assert result.holds
            assert abs(result.rhs - brute_force_rhs(table)) <= 1e-9 * max(1.0, result.rhs)
            if result.lhs == 0.0:
                assert result.rhs == 0.0


class TestAntidistCriteria:
    def test_orthogonal_pair(self, zero, one, plus):
        assert has_orthogonal_pair([zero, plus, one])
        assert not has_orthogonal_pair([zero, plus])

    def test_johnston_threshold(self):
        assert johnston_threshold(3) == pytest.approx(0.5)
        assert johnston_threshold(4) == pytest.approx(1.0 / math.sqrt(3.0))

    def test_johnston_needs_three(self, zero, plus):
        with pytest.raises(RangeError):
            johnston_criterion([zero, plus])

    def test_johnston_trine(self, trine):
        assert johnston_criterion(trine)

    def test_johnston_mub_quadruple(self):
        bases = mub_bases(3, 4)
        assert johnston_criterion([basis[0] for basis in bases])

    def test_johnston_rejects_close_states(self, zero, plus):
        close = PureState(np.array([math.cos(0.1), math.sin(0.1)]))
        assert not johnston_criterion([zero, plus, close])

    def test_caves_examples(self):
        assert caves_criterion(0.25, 0.25, 0.25)
        assert caves_criterion(0.0, 0.0, 0.0)
        assert not caves_criterion(0.5, 0.5, 0.5)
        assert caves_criterion(0.2, 0.2, 0.2)

    def test_caves_range(self):
        with pytest.raises(RangeError):
            caves_criterion(1.5, 0.0, 0.0)
        with pytest.raises(RangeError):
            caves_criterion(float("nan"), 0.0, 0.0)

    def test_caves_for_trine(self, trine):
        assert caves_for_states(*trine)

    def test_fast_paths_agree_with_sdp(self):
        rng = make_rng(23)
        fives = mub_bases(5, 3)
        threes = mub_bases(3, 4)
        cases = [tuple(b[int(rng.integers(5))] for b in fives) for _ in range(5)]
        cases += [tuple(b[int(rng.integers(3))] for b in threes) for _ in range(5)]
        cases += [tuple(random_pure_state(rng, 3) for _ in range(3)) for _ in range(10)]
        for states in cases:
            fast = (len(states) == 3 and caves_for_states(*states)) or johnston_criterion(states)
            if fast:
                assert antidist_sdp(list(states)).a_q >= 1.0 - 1e-6

    @pytest.mark.slow
    def test_fast_paths_sound_at_scale(self):
        rng = make_rng(41)
        qualifying = []
        for _ in range(20_000):
            d = int(rng.integers(3, 7))
            n = int(rng.integers(3, 5))
            states = [random_pure_state(rng, d) for _ in range(n)]
            if (n == 3 and caves_for_states(*states)) or johnston_criterion(states):
                qualifying.append(states)
            if len(qualifying) == 500:
                break
        assert len(qualifying) == 500
        for states in qualifying:
            assert antidist_sdp(states).a_q >= 1.0 - 1e-6


class TestTupleResolver:
    def test_methods(self, zero, one, plus, trine):
        resolver = TupleResolver({"spot_checks": 0})
        assert resolver.resolve(trine).method == "qubit-geometry"
        assert resolver.resolve([PureState.basis(3, 0), PureState.basis(3, 1), PureState.basis(3, 2)]).method == (
            "orthogonal-pair"
        )
        pair = resolver.resolve([zero, plus])
        assert pair.method == "pair-closed-form"
        assert pair.omega == pytest.approx(1.0 - S2)
        assert not pair.antidist

    def test_qubit_triple_falls_back_to_sdp(self, zero, plus):
        mid = PureState(np.array([math.cos(math.pi / 8), math.sin(math.pi / 8)]))
        cert = TupleResolver().resolve([zero, plus, mid])
        assert cert.method == "sdp"
        assert not cert.antidist
        assert cert.omega > 0
        assert cert.verified_a_q == cert.a_q

    def test_resolve_safe_degrades(self, zero, plus, monkeypatch):
        resolver = TupleResolver()

        def fail(states):
            raise ConvergenceError("forced", best_primal=0.3)

        monkeypatch.setattr(resolver.solver, "solve", fail)
        mid = PureState(np.array([math.cos(math.pi / 8), math.sin(math.pi / 8)]))
        cert = resolver.resolve_safe([zero, plus, mid])
        assert cert.method == "unconverged"
        assert cert.omega == pytest.approx(0.3)
        assert resolver.stats["unconverged"] == 1

    def test_parallel_matches_sequential(self, trine, zero, plus, one):
        tuples = [trine, (zero, plus), (zero, plus, one)]
        sequential = TupleResolver({"max_workers": 1}).resolve_many(tuples)
        parallel = TupleResolver({"max_workers": 4}).resolve_many(tuples)
        assert sequential == parallel

    def test_parallel_stats_complete(self, zero, plus):
        basis = tuple(PureState.basis(3, i) for i in range(3))
        tuples = [(zero, plus), basis] * 200
        resolver = TupleResolver({"max_workers": 8})
        resolver.resolve_many(tuples)
        assert resolver.stats == {"pair-closed-form": 200, "orthogonal-pair": 200}

    def test_certificate_round_trip(self):
        cert = TupleCertificate(antidist=False, a_q=0.9, method="sdp", omega=0.3, verified_a_q=0.9)
        assert TupleCertificate.from_dict(cert.to_dict()) == cert


class TestDecomposition:
    def test_example1_prefactor(self, example1_preps):
        assert decomposition_prefactor(example1_preps) == Fraction(2, 1)

    def test_uniform_prefactor(self):
        assert decomposition_prefactor(mub_preparations(3, 4)) == Fraction(1, 3)

    def test_enumerate_tuples(self, example1_preps):
        terms = enumerate_tuples(example1_preps)
        assert [t.indices for t in terms] == [(0, 0, 0), (0, 0, 1)]
        assert all(t.weight == 1 for t in terms)

    def test_tuple_limit(self, example1_preps):
        with pytest.raises(RangeError) as info:
            enumerate_tuples(example1_preps, max_tuples=1)
        assert info.value.details["tuples"] == 2

    def test_theorem1_bound_constant_overlap(self, example1_preps):
        assert theorem1_bound(example1_preps, lambda states: 1.0) == pytest.approx(4.0)
        assert theorem1_bound(example1_preps, lambda states: 0.0) == 0.0

    def test_theorem1_needs_two(self, zero):
        with pytest.raises(RangeError):
            theorem1_bound([MixedPreparation.pure(zero)], lambda states: 1.0)

    def test_uniform_bound(self):
        preps = mub_preparations(3, 2)
        assert uniform_decomposition_bound(preps, lambda states: 1.0) == 0.0
        assert uniform_decomposition_bound(preps, lambda states: 0.5) == pytest.approx(2 * 9 * 0.5 / 3)

    def test_uniform_bound_rejects_unequal(self, example1_preps):
        with pytest.raises(DomainError):
            uniform_decomposition_bound(example1_preps, lambda states: 1.0)


class TestBounds:
    def test_corollary5(self):
        assert corollary5_bound(2) == pytest.approx(2.0 - math.sqrt(2.0), abs=1e-15)
        assert corollary5_bound(3) == pytest.approx(3.0 - math.sqrt(6.0), abs=1e-15)

    def test_corollary5_decreases_to_half(self):
        values = [corollary5_bound(d) for d in (2, 3, 10, 1000, 10**6)]
        assert values == sorted(values, reverse=True)
        assert 0.5 < values[-1] < 0.5 + 1e-6

    def test_theorem7(self):
        assert theorem7_avg_ratio_bound(5) == pytest.approx(0.2)
        assert theorem7_avg_ratio_bound(4) == pytest.approx(0.25)

    def test_theorem8(self):
        assert theorem8_bound(1000, 4) == pytest.approx(0.50596, abs=1e-5)

    def test_psi_ratio(self):
        assert psi_epistemic_ratio_bound(4) == pytest.approx(0.5)
        assert psi_epistemic_ratio_bound(101) == pytest.approx(2.0 / 101)

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 7, 50])
    def test_mub_pair_ratio_below_two_over_d(self, d):
        assert mub_pair_ratio(d) <= 2.0 / d
        closed = 1.0 / (d * d * (1.0 - math.sqrt(1.0 - 1.0 / d)))
        assert mub_pair_ratio(d) == pytest.approx(closed, rel=1e-12)

    @pytest.mark.parametrize(
        "call",
        [
            lambda: theorem7_avg_ratio_bound(6),
            lambda: theorem7_avg_ratio_bound(3),
            lambda: psi_epistemic_ratio_bound(10),
            lambda: theorem8_bound(0, 5),
            lambda: theorem8_bound(10, 3),
            lambda: corollary5_bound(1),
            lambda: corollary5_bound(2.5),
        ],
    )
    def test_domain_errors(self, call):
        with pytest.raises(DomainError):
            call()

    def test_theorem5_on_mub_family(self):
        preps = mub_preparations(5, 3)
        assert theorem5_bound(preps[0], preps[1:]) == pytest.approx(1.0)

    def test_lewis_threshold(self, zero, plus):
        assert lewis_threshold(zero, zero, 2)
        assert not lewis_threshold(zero, plus, 2)
        close = PureState(np.array([math.cos(0.1), math.sin(0.1)]))
        assert lewis_threshold(zero, close, 2)
        with pytest.raises(DimensionMismatchError):
            lewis_threshold(zero, plus, 3)


class TestSWitness:
    def test_optimal_configuration(self):
        states, measurements = optimal_parity_oblivious_config()
        result = s_witness(states, measurements)
        assert result.s == pytest.approx(0.5 * (1.0 + S2), abs=1e-9)
        assert result.d_q == pytest.approx(0.5, abs=1e-12)
        assert result.ratio_bound == pytest.approx(2.0 - math.sqrt(2.0), abs=1e-9)

    def test_identical_states(self, plus):
        _, measurements = optimal_parity_oblivious_config()
        rho = plus.density()
        result = s_witness([rho] * 4, measurements)
        assert result.s == pytest.approx(0.5)
        assert result.ratio_bound == pytest.approx(2.0)

    def test_classical_encoding_undefined(self):
        states, measurements = classical_parity_encoding()
        with pytest.raises(WitnessUndefinedError) as info:
            s_witness(states, measurements)
        assert info.value.details["s"] == pytest.approx(1.0)

    def test_missing_label(self):
        states, measurements = optimal_parity_oblivious_config()
        del states["11"]
        with pytest.raises(StructuralError):
            s_witness(states, measurements)

    def test_needs_two_measurements(self):
        states, measurements = optimal_parity_oblivious_config()
        with pytest.raises(StructuralError):
            s_witness(states, measurements[:1])

    def test_maximally_mixed_parity_floor(self):
        """ρ0 = ρ1 = I/2 的量子比特配置，比值上界不低于 2 − √2"""
        rng = make_rng(53)

        def qubit(v: np.ndarray) -> PureState:
            return qubit_from_bloch(BlochVector(*v))

        for _ in range(500):
            u, w = random_unit_vector(rng), random_unit_vector(rng)
            states = {
                "00": qubit(u).density(),
                "11": qubit(-u).density(),
                "01": qubit(w).density(),
                "10": qubit(-w).density(),
            }
            measurements = []
            for _ in range(2):
                m = random_unit_vector(rng)
                measurements.append(Povm((qubit(m).projector(), qubit(-m).projector())))
            result = s_witness(states, measurements)
            assert result.d_q == pytest.approx(0.5, abs=1e-9)
            assert result.ratio_bound >= 2.0 - math.sqrt(2.0) - 1e-6


class TestDecideCategory:
    @pytest.mark.parametrize(
        "omega_q,omega_e,degraded,expected",
        [
            (0.0, 0.0, False, Category.ORTHOGONAL_TRIVIAL),
            (1.0, 0.0, False, Category.CERTIFIED_FULLY_NON_EPISTEMIC),
            (0.2, 0.0, False, Category.CERTIFIED_NON_EPISTEMIC),
            (1.0, 0.5, False, Category.NON_MAXIMALLY_EPISTEMIC_WITNESS),
            (0.3, 0.5, False, Category.INCONCLUSIVE),
            (1.0, 0.0, True, Category.INCONCLUSIVE),
        ],
    )
    def test_cases(self, omega_q, omega_e, degraded, expected):
        assert decide_category(omega_q, omega_e, degraded) == expected

    def test_report_rejects_inconsistent_category(self):
        with pytest.raises(StructuralError):
            ClassificationReport(
                omega_q=0.1,
                omega_e_upper=0.5,
                tuple_certificates={},
                category=Category.CERTIFIED_NON_EPISTEMIC,
            )
        with pytest.raises(StructuralError):
            ClassificationReport(
                omega_q=0.5,
                omega_e_upper=0.5,
                tuple_certificates={},
                category=Category.NON_MAXIMALLY_EPISTEMIC_WITNESS,
            )


class TestClassifier:
    def test_example1(self, example1_preps):
        report = classify(example1_preps)
        assert report.category == Category.CERTIFIED_NON_EPISTEMIC
        assert report.omega_e_upper == 0.0
        assert report.omega_q == pytest.approx(0.1161, abs=2e-3)
        assert all(c.antidist for c in report.tuple_certificates.values())

    def test_report_round_trip(self, example1_preps):
        report = classify(example1_preps)
        assert ClassificationReport.from_dict(report.to_dict()) == report

    def test_maximally_mixed_qubits(self):
        report = classify(mub_preparations(2, 2))
        assert report.omega_q == pytest.approx(1.0, abs=1e-6)
        assert report.omega_e_upper == pytest.approx(2.0 - math.sqrt(2.0), abs=1e-12)
        assert report.category == Category.NON_MAXIMALLY_EPISTEMIC_WITNESS
        assert report.preparation_contextual
        assert not report.fully_contextual
        assert any("KS" in note for note in report.diagnostics)

    def test_orthogonal_preparations(self, zero, one):
        report = classify([MixedPreparation.pure(zero), MixedPreparation.pure(one)])
        assert report.category == Category.ORTHOGONAL_TRIVIAL

    def test_degraded_solver_is_inconclusive(self, example1_preps, monkeypatch):
        engine = ClassificationEngine()

        def fail(states):
            raise ConvergenceError("forced", best_primal=0.2)

        monkeypatch.setattr(engine.solver, "solve", fail)
        report = engine.classify(example1_preps)
        assert report.category == Category.INCONCLUSIVE
        assert engine.stats["inconclusive"] == 1

    def test_weight_approximation_reported(self, zero, one, plus):
        w = 1.0 / math.sqrt(3.0)
        prep = MixedPreparation.from_weights((zero, one), (w, 1.0 - w), max_denominator=1000)
        report = classify([prep, MixedPreparation.pure(plus)])
        assert report.weight_approximation > 0
        assert report.diagnostics

    @pytest.mark.slow
    def test_example2_mub_d3(self):
        report = classify(mub_preparations(3, 4))
        assert report.category == Category.CERTIFIED_FULLY_NON_EPISTEMIC
        assert report.preparation_contextual is False
        assert {c.method for c in report.tuple_certificates.values()} == {"johnston"}

    @pytest.mark.slow
    def test_example3_mub_d5(self):
        report = classify(mub_preparations(5, 3))
        assert report.category == Category.CERTIFIED_FULLY_NON_EPISTEMIC
        assert len(report.tuple_certificates) == 125
        assert {c.method for c in report.tuple_certificates.values()} == {"caves"}
