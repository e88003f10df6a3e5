import itertools
import random
from fractions import Fraction

import pytest

from octimage.algebra import OctonionAlgebra, random_octonion
from octimage.classify import (
    FULL,
    PURE,
    SCALARS,
    ZERO,
    basic_evaluations,
    classify_multilinear,
    evaluate_at_basis,
    realize_target,
    sample_consistency,
)
from octimage.errors import (
    BudgetExceeded,
    ConsistencyViolation,
    ModeMismatch,
    NotFullImage,
    NotMultilinear,
)
from octimage.fields import REAL
from octimage.polynomials import (
    Polynomial,
    anticommutator,
    associator,
    commutator,
    parse_polynomial,
    random_multilinear,
    scalar_image_example,
)

import oracle

ALG = OctonionAlgebra.standard()
REAL_ALG = OctonionAlgebra.standard(REAL)


class TestBasicEvaluations:
    def test_commutator_central_tuple(self):
        ev = evaluate_at_basis(commutator(), (0, 3), ALG)
        assert ev.coefficient == 0 and ev.basis_index == 0

    def test_commutator_pure_tuple(self):
        ev = evaluate_at_basis(commutator(), (1, 2), ALG)
        assert abs(ev.coefficient) == 2 and ev.basis_index == 3

    def test_associator_repeated_adjacent_slots(self):
        # alternativity kills any tuple with equal adjacent arguments
        for i, j in itertools.product(range(8), repeat=2):
            assert evaluate_at_basis(associator(), (i, i, j), ALG).coefficient == 0
            assert evaluate_at_basis(associator(), (i, j, j), ALG).coefficient == 0

    def test_stream_order_and_length(self):
        evs = list(basic_evaluations(commutator(), ALG))
        assert len(evs) == 64
        assert [e.tuple_indices for e in evs[:3]] == [(0, 0), (0, 1), (0, 2)]

    def test_matches_oracle_values(self):
        rng = random.Random(31)
        for _ in range(5):
            p = random_multilinear(2, rng)
            for ev in basic_evaluations(p, ALG):
                val = oracle.eval_poly(p.terms, [oracle.basis(i) for i in ev.tuple_indices])
                expected = [Fraction(0)] * 8
                expected[ev.basis_index] = Fraction(ev.coefficient)
                assert list(val) == expected

    def test_requires_multilinear(self):
        with pytest.raises(NotMultilinear):
            list(basic_evaluations(parse_polynomial("x1*x1"), ALG))

    def test_requires_rational_mode(self):
        with pytest.raises(ModeMismatch):
            list(basic_evaluations(commutator(), REAL_ALG))

    def test_budget(self):
        p = Polynomial([(1, tuple_word(9))], 9)
        with pytest.raises(BudgetExceeded):
            list(basic_evaluations(p, ALG))


def tuple_word(n):
    word = 1
    for k in range(2, n + 1):
        word = (word, k)
    return word


class TestVerdicts:
    def test_zero(self):
        assert classify_multilinear(Polynomial.zero()).verdict == ZERO

    def test_commutator_pure(self):
        cls = classify_multilinear(commutator())
        assert cls.verdict == PURE
        ev = cls.evidence[0]
        assert ev.basis_index != 0 and ev.coefficient != 0

    def test_associator_pure(self):
        assert classify_multilinear(associator()).verdict == PURE

    def test_anticommutator_full_with_witnesses(self):
        cls = classify_multilinear(anticommutator())
        assert cls.verdict == FULL
        scalar_ev, pure_ev = cls.evidence
        assert scalar_ev.tuple_indices == (0, 0) and scalar_ev.coefficient == 2
        assert pure_ev.tuple_indices == (0, 1) and pure_ev.coefficient == 2
        assert pure_ev.basis_index == 1

    def test_identity_full(self):
        assert classify_multilinear(parse_polynomial("x1")).verdict == FULL

    def test_scalar_image_example(self):
        cls = classify_multilinear(scalar_image_example())
        assert cls.verdict == SCALARS
        assert cls.evidence[0].basis_index == 0

    def test_full_scan_same_result(self):
        for p in (commutator(), anticommutator(), scalar_image_example()):
            short = classify_multilinear(p)
            full = classify_multilinear(p, full_scan=True)
            assert short.verdict == full.verdict
            assert [e.to_dict() for e in short.evidence] == \
                [e.to_dict() for e in full.evidence]

    def test_threads_do_not_change_result(self):
        for p in (anticommutator(), associator()):
            one = classify_multilinear(p, threads=1)
            four = classify_multilinear(p, threads=4)
            assert one.to_dict() == four.to_dict()

    def test_not_multilinear(self):
        with pytest.raises(NotMultilinear):
            classify_multilinear(parse_polynomial("x1*x1"))

    def test_property_p_flag_warns(self):
        cls = classify_multilinear(commutator(), assume_property_p=False)
        assert cls.verdict == PURE
        assert any("certified" in w for w in cls.warnings)
        assert classify_multilinear(
            scalar_image_example(), assume_property_p=False).warnings == []


class TestVerdictInvariances:
    def test_oracle_agreement_corpus(self):
        corpus = [
            commutator(), anticommutator(), associator(),
            parse_polynomial("(x1*x2)*x3 - x3*(x2*x1)"),
            parse_polynomial("x1"), Polynomial.zero(1),
        ]
        for p in corpus:
            expected = oracle.verdict(p.terms, p.num_vars) if p.terms else ZERO
            assert classify_multilinear(p).verdict == expected

    def test_oracle_agreement_random(self):
        rng = random.Random(33)
        for _ in range(25):
            p = random_multilinear(rng.randint(1, 3), rng)
            assert classify_multilinear(p).verdict == oracle.verdict(p.terms, p.num_vars)

    def test_coefficient_scaling_invariance(self):
        rng = random.Random(34)
        for p in (commutator(), anticommutator(), random_multilinear(3, rng)):
            base = classify_multilinear(p).verdict
            for scale in (Fraction(7, 2), -3, Fraction(-1, 5)):
                assert classify_multilinear(p.scale(scale)).verdict == base

    def test_permutation_equivariance(self):
        rng = random.Random(35)
        for _ in range(10):
            n = rng.randint(2, 3)
            p = random_multilinear(n, rng)
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            renamed = Polynomial(
                [(c, _rename(w, perm)) for c, w in p.terms], n)
            assert classify_multilinear(renamed).verdict == classify_multilinear(p).verdict

    def test_lemma_single_coordinate_random(self):
        rng = random.Random(36)
        for _ in range(10):
            p = random_multilinear(rng.randint(1, 3), rng)
            for ev in basic_evaluations(p, ALG):
                assert isinstance(ev.basis_index, int)  # scan itself verifies the law


def _rename(word, perm):
    if isinstance(word, int):
        return perm[word - 1]
    return (_rename(word[0], perm), _rename(word[1], perm))


class TestSampleConsistency:
    def test_pure_containment(self):
        cls = classify_multilinear(commutator())
        rep = sample_consistency(commutator(), cls, samples=200, seed=1)
        assert rep.samples_checked == 200 and rep.span_dimension is None

    def test_zero_polynomial(self):
        p = Polynomial.zero(2)
        rep = sample_consistency(p, classify_multilinear(p), samples=10, seed=1)
        assert rep.samples_checked == 10

    def test_full_span_dimension(self):
        cls = classify_multilinear(anticommutator())
        rep = sample_consistency(anticommutator(), cls, samples=200, seed=2)
        assert rep.span_dimension == 8

    def test_scalars_containment(self):
        p = scalar_image_example()
        rep = sample_consistency(p, classify_multilinear(p), samples=60, seed=3)
        assert rep.samples_checked == 60

    def test_violation_detected(self):
        # feeding a wrong verdict must raise, proving the check has teeth
        wrong = classify_multilinear(commutator())
        wrong.verdict = ZERO
        with pytest.raises(ConsistencyViolation):
            sample_consistency(commutator(), wrong, samples=50, seed=4)


class TestRealizeTarget:
    def test_scalar_target_example(self):
        # (1/2)e0, e0 realizes the unit: p(a, b) = ab + ba = 2 * (1/2) = 1
        p = anticommutator()
        half, one = 0.5 * REAL_ALG.e(0), REAL_ALG.e(0)
        assert (p.evaluate([half, one]) - REAL_ALG.e(0)).is_zero()
        got = realize_target(p, REAL_ALG.e(0), seed=0)
        assert (p.evaluate(got) - REAL_ALG.e(0)).norm() ** 0.5 <= 1e-8

    def test_zero_target(self):
        got = realize_target(anticommutator(), REAL_ALG.zero(), seed=0)
        assert any(x.is_zero() for x in got)
        assert anticommutator().evaluate(got).is_zero()

    def test_mixed_target(self):
        q = REAL_ALG.parse("1 + 7*e5")
        got = realize_target(anticommutator(), q, seed=0)
        assert (anticommutator().evaluate(got) - q).norm() ** 0.5 <= 1e-9

    def test_identity_polynomial(self):
        q = REAL_ALG.parse("-2 + 3*e1 - e6")
        got = realize_target(parse_polynomial("x1"), q, seed=1)
        assert (parse_polynomial("x1").evaluate(got) - q).norm() ** 0.5 <= 1e-9

    def test_random_targets(self):
        rng = random.Random(37)
        p = anticommutator()
        cls = classify_multilinear(p)
        for i in range(5):
            q = random_octonion(REAL_ALG, rng)
            got = realize_target(p, q, seed=i, classification=cls)
            assert (p.evaluate(got) - q).norm() ** 0.5 <= 1e-8

    def test_requires_full(self):
        with pytest.raises(NotFullImage):
            realize_target(commutator(), REAL_ALG.e(0), seed=0)

    def test_requires_real_mode(self):
        with pytest.raises(ModeMismatch):
            realize_target(anticommutator(), ALG.e(0), seed=0)
