"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; a pytest failure in here means the corresponding criterion is red.
All tolerances are pinned in this file.
"""

import json
import math
import random
import time
from fractions import Fraction

from octimage import cli
from octimage.algebra import OctonionAlgebra, doubling_multiply, random_octonion
from octimage.classify import (
    ANOMALOUS,
    DENSE,
    FULL,
    PURE,
    ZERO,
    classify_multilinear,
    realize_target,
    sample_consistency,
)
from octimage.fields import REAL
from octimage.malcev import (
    classify_malcev,
    malcev_identity_residual,
    malcev_product,
    realize_malcev_target,
)
from octimage.orbits import map_pure
from octimage.polynomials import (
    Polynomial,
    anticommutator,
    associator,
    commutator,
    parse_polynomial,
    random_homogeneous,
    random_multilinear,
)
from octimage.semihomogeneous import (
    classify_semihomogeneous,
    eigenvalue_ratio_stat,
    ratio_function,
)

import oracle

ALG = OctonionAlgebra.standard()
REAL_ALG = OctonionAlgebra.standard(REAL)

RESIDUAL_TOL = 1e-8


def _report(number: int, text: str) -> None:
    print(f"criterion {number:2d} PASS: {text}")


def euclid(x):
    return x.norm() ** 0.5


def test_criterion_01_algebra_exactness_suite():
    start = time.perf_counter()
    rng = random.Random(1001)
    for _ in range(1000):
        a = random_octonion(ALG, rng)
        b = random_octonion(ALG, rng)
        aa, ab, ba = a * a, a * b, b * a
        assert (aa * b - a * ab).is_zero()          # [a,a,b] = 0
        assert (ab * a - a * ba).is_zero()          # [a,b,a] = 0
        assert (ba * a - b * aa).is_zero()          # [b,a,a] = 0
        assert ab.norm() == a.norm() * b.norm()
        assert ab.conjugate() == b.conjugate() * a.conjugate()
        assert ab.trace() == ba.trace()
        v = a.pure_part()
        assert (v * v + ALG.scalar(v.norm())).is_zero()
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"exactness suite took {elapsed:.2f}s"
    _report(1, f"five identity families exact on 1000 random octonions "
               f"({elapsed:.2f}s < 5s)")


def test_criterion_02_structure_table_oracle():
    for params in ((-1, -1, -1), (-1, 2, -3)):
        alg = OctonionAlgebra(params)
        for i in range(8):
            for j in range(8):
                ei = [0] * 8
                ej = [0] * 8
                ei[i] = 1
                ej[j] = 1
                assert tuple(doubling_multiply(ei, ej, alg.params)) == \
                    (alg.e(i) * alg.e(j)).coords
    _report(2, "table product equals recursive doubling on all 64 basis pairs")


def _lemma_corpus():
    corpus = [
        commutator(),
        anticommutator(),
        associator(),
        parse_polynomial("(x1*x2)*x3 - x3*(x2*x1)"),
    ]
    rng = random.Random(1003)
    corpus.extend(random_multilinear(rng.randint(1, 4), rng) for _ in range(20))
    return corpus


def test_criterion_03_single_coordinate_certificate():
    start = time.perf_counter()
    corpus = _lemma_corpus()
    total = 0
    spot_rng = random.Random(1004)
    for poly in corpus:
        spot = []
        for ev in cli.classify_mod.basic_evaluations(poly, ALG):
            total += 1
            if spot_rng.random() < 0.005:
                spot.append(ev)
        # independent spot check through full coordinate arithmetic
        for ev in spot[:10]:
            value = poly.evaluate([ALG.e(i) for i in ev.tuple_indices])
            nonzero = [(k, c) for k, c in enumerate(value.coords) if c != 0]
            assert len(nonzero) <= 1
            if nonzero:
                assert nonzero[0] == (ev.basis_index, ev.coefficient)
            else:
                assert ev.coefficient == 0
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"certificate scan took {elapsed:.2f}s"
    _report(3, f"{total} basis evaluations across {len(corpus)} polynomials, "
               f"all scalar multiples of one basis element ({elapsed:.2f}s < 10s)")


def test_criterion_04_four_way_verdicts():
    cases = [
        (commutator(), PURE),
        (associator(), PURE),
        (anticommutator(), FULL),
        (parse_polynomial("x1"), FULL),
        (Polynomial.zero(2), ZERO),
    ]
    for poly, expected in cases:
        cls = classify_multilinear(poly, ALG)
        assert cls.verdict == expected, poly.render()
        rep = sample_consistency(poly, cls, samples=200, seed=1004, algebra=ALG)
        assert rep.samples_checked == 200
        if expected == FULL:
            assert rep.span_dimension == 8
        if poly.num_vars <= 3:
            ref = oracle.verdict(poly.terms, poly.num_vars) if poly.terms else ZERO
            assert cls.verdict == ref
    _report(4, "commutator/associator Pure, anticommutator and x Full, 0 Zero; "
               "200-sample containment and n<=3 brute-force oracle agree")


def test_criterion_05_constructive_surjectivity():
    start = time.perf_counter()
    p = anticommutator()
    cls = classify_multilinear(p)
    rng = random.Random(1005)
    worst = 0.0
    for i in range(20):
        q = random_octonion(REAL_ALG, rng)
        assignment = realize_target(p, q, seed=i, classification=cls)
        worst = max(worst, euclid(p.evaluate(assignment) - q))
    elapsed = time.perf_counter() - start
    assert worst <= RESIDUAL_TOL
    assert elapsed < 10.0, f"realization took {elapsed:.2f}s"
    _report(5, f"20 random targets realized for x*y + y*x, worst residual "
               f"{worst:.2e} <= 1e-8 ({elapsed:.2f}s < 10s)")


def test_criterion_06_orbit_transitivity():
    rng = random.Random(1006)
    worst_map = 0.0
    worst_mult = 0.0
    for i in range(50):
        x = random_octonion(REAL_ALG, rng, pure=True)
        y = random_octonion(REAL_ALG, rng, pure=True)
        c, phi = map_pure(x, y, seed=i)
        worst_map = max(worst_map, euclid(y - c * phi.apply(x)))
        if abs(x.norm() - y.norm()) <= REAL_ALG.mode.tolerance:
            assert c == 1.0
        for _ in range(100):
            a = random_octonion(REAL_ALG, rng)
            b = random_octonion(REAL_ALG, rng)
            worst_mult = max(worst_mult, euclid(phi.apply(a * b) - phi.apply(a) * phi.apply(b)))
    assert worst_map <= RESIDUAL_TOL
    assert worst_mult <= RESIDUAL_TOL
    _report(6, f"50 random pure pairs mapped (worst residual {worst_map:.2e}), "
               f"multiplicativity on 100 pairs each (worst {worst_mult:.2e})")


def test_criterion_07_malcev_suite():
    rng = random.Random(1007)
    for _ in range(1000):
        x = random_octonion(ALG, rng, pure=True)
        y = random_octonion(ALG, rng, pure=True)
        z = random_octonion(ALG, rng, pure=True)
        assert (malcev_product(x, y) + malcev_product(y, x)).is_zero()
        assert malcev_identity_residual(x, y, z).is_zero()

    assert classify_malcev(parse_polynomial("x1*x2"), samples=50, seed=7).verdict == PURE
    zero_cls = classify_malcev(parse_polynomial("x1*x2 + x2*x1"), samples=50, seed=7)
    assert zero_cls.verdict == ZERO
    assert zero_cls.details["grid_points"] == 49  # deterministic certificate ran

    p = parse_polynomial("x1*x2")
    worst = 0.0
    for i in range(10):
        target = random_octonion(REAL_ALG, rng, pure=True)
        assignment = realize_malcev_target(p, target, seed=i)
        worst = max(worst, euclid(p.evaluate(assignment, product="malcev") - target))
    assert worst <= RESIDUAL_TOL
    _report(7, f"bracket identities exact on 1000 triples; xy Pure, xy+yx Zero "
               f"with grid certificate; 10 targets realized (worst {worst:.2e})")


def test_criterion_08_semihomogeneous_verdicts():
    square = parse_polynomial("x1*x1")
    cls = classify_semihomogeneous(square, samples=60, seed=8)
    assert cls.verdict == DENSE
    # the two stated exact ratio values, re-derived by the implementation
    at_2_e1 = ratio_function(square, [ALG.parse("2 + e1")])
    assert at_2_e1.ratio == Fraction(16, 9)
    at_1_e2 = ratio_function(square, [ALG.parse("1 + e2")])
    assert at_1_e2.ratio == math.inf

    assert classify_semihomogeneous(commutator(), samples=60, seed=8).verdict == PURE

    rng = random.Random(1008)
    for _ in range(50):
        poly = random_homogeneous(rng.randint(1, 3), rng.randint(1, 4), rng)
        verdict = classify_semihomogeneous(poly, samples=40, seed=8).verdict
        assert verdict != ANOMALOUS, poly.render()
    _report(8, "x*x Dense with exact ratios 16/9 and inf; commutator Pure; "
               "no Anomalous verdict over 50 random semihomogeneous polynomials")


def test_criterion_09_eigenvalue_machinery():
    rng = random.Random(1009)
    for _ in range(1000):
        assert random_octonion(ALG, rng).char_poly_residual().is_zero()
    ident = parse_polynomial("x1")
    assert eigenvalue_ratio_stat(ident, [ALG.scalar(3)]) == 2
    assert eigenvalue_ratio_stat(ident, [ALG.e(1)]) == -2
    # (4*a^2 - 2*norm)/norm at 1 + e2 is (4 - 4)/2 = 0 exactly
    assert eigenvalue_ratio_stat(ident, [ALG.parse("1 + e2")]) == 0
    _report(9, "char-poly residual exactly 0 on 1000 octonions; ratio statistic "
               "2 / -2 / 0 at the three reference points")


def test_criterion_10_cli_determinism(capsys):
    invocations = [
        ("classify", "--poly", "x1*x2 + x2*x1", "--json", "--seed", "17"),
        ("semi", "--poly", "x1*x1", "--json", "--seed", "17"),
        ("malcev", "--poly", "x1*x2", "--json", "--seed", "17"),
        ("orbit", "--from", "e1 + e3", "--to", "e5 - 2*e7", "--json", "--seed", "17"),
        ("table", "--json"),
        ("selfcheck", "--json", "--seed", "17"),
    ]
    for argv in invocations:
        outputs = set()
        for extra in ((), ("--threads", "1"), ("--threads", "4"), ()):
            code = cli.main(list(argv) + list(extra))
            assert code == 0
            outputs.add(capsys.readouterr().out)
        assert len(outputs) == 1, f"nondeterministic output for {argv}"
        json.loads(outputs.pop())
    _report(10, "byte-identical JSON across repeated runs and thread counts "
                "for all six reporting subcommands")
