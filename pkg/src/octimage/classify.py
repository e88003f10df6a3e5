"""Image classification of multilinear polynomials on an octonion algebra.

Every evaluation of a multilinear polynomial at basis octonions is a scalar
multiple of a single basis octonion (products of basis elements commute and
associate up to scalars).  Scanning the 8^n basis tuples therefore decides
between exactly four images -- {0}, the scalars, the pure subspace, or the
whole algebra -- and the scan doubles as a certificate because the
single-coordinate property is checked for every tuple rather than assumed.

The scan walks the structure table directly (never the generic octonion
product), streams in lexicographic tuple order, and short-circuits once both
a nonzero scalar and a nonzero pure witness are seen.  Work is processed in
fixed-size chunks so that the recorded evidence and the report are identical
for any thread count.

`realize_target` implements the constructive surjectivity for the full-image
case: starting from a basic tuple with a nonzero scalar value, slots are
randomized one at a time until the value leaves the scalars, the pure
component is isolated by multilinearity, and an automorphism transports it
onto the requested target.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from . import orbits
from ._linalg import SpanTracker
from .algebra import Octonion, OctonionAlgebra, random_octonion
from .errors import (
    BudgetExceeded,
    ConsistencyViolation,
    DegenerateDraw,
    Lemma3Violation,
    ModeMismatch,
    NotFullImage,
    NotMultilinear,
    OctimageError,
)
from .polynomials import Polynomial

MAX_SCAN_VARS = 8
SCAN_CHUNK = 1024

ZERO = "Zero"
SCALARS = "Scalars"
PURE = "Pure"
FULL = "Full"
DENSE = "Dense"
ANOMALOUS = "Anomalous"


@dataclass(frozen=True)
class BasicEvaluation:
    """Value of the polynomial at one tuple of basis octonions: exactly
    ``coefficient * e_{basis_index}`` (basis_index 0 when the value is 0)."""

    tuple_indices: tuple[int, ...]
    coefficient: object
    basis_index: int

    def to_dict(self) -> dict:
        return {
            "tuple": list(self.tuple_indices),
            "coeff": str(self.coefficient),
            "basis": self.basis_index,
        }


@dataclass
class Classification:
    verdict: str
    evidence: list[BasicEvaluation] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    tuples_scanned: int = 0
    samples_checked: Optional[int] = None
    span_dimension: Optional[int] = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "evidence": [e.to_dict() for e in self.evidence],
            "samples_checked": self.samples_checked,
            "span_dimension": self.span_dimension,
            "warnings": list(self.warnings),
            "details": dict(self.details),
        }


def _require_multilinear(poly: Polynomial) -> None:
    if not poly.degree_profile().is_multilinear:
        raise NotMultilinear(
            "this classification requires a multilinear polynomial; "
            "use the semihomogeneous analysis for general inputs"
        )


def _word_at_basis(word, tup, tc, ti):
    """Evaluate a word at basis elements by table walking: (coeff, index)."""
    if isinstance(word, int):
        return 1, tup[word - 1]
    c1, k1 = _word_at_basis(word[0], tup, tc, ti)
    c2, k2 = _word_at_basis(word[1], tup, tc, ti)
    c = tc[k1][k2]
    return c1 * c2 * c, ti[k1][k2]


def evaluate_at_basis(poly: Polynomial, tup: Sequence[int], algebra: OctonionAlgebra) -> BasicEvaluation:
    """Exact value at (e_{i1}, ..., e_{in}), verified to be a scalar multiple
    of one basis element."""
    tc = algebra.table_coeff
    ti = algebra.table_index
    acc: dict = {}
    for coeff, word in poly.terms:
        c, k = _word_at_basis(word, tup, tc, ti)
        acc[k] = acc.get(k, 0) + coeff * c
    nonzero = [(k, c) for k, c in acc.items() if c != 0]
    if len(nonzero) > 1:
        raise Lemma3Violation(
            f"evaluation at basis tuple {tuple(tup)} has {len(nonzero)} nonzero "
            "coordinates; the single-coordinate law fails, which indicates a bug "
            "or non-octonion algebra parameters"
        )
    if not nonzero:
        return BasicEvaluation(tuple(tup), 0, 0)
    k, c = nonzero[0]
    return BasicEvaluation(tuple(tup), c, k)


def basic_evaluations(
    poly: Polynomial,
    algebra: Optional[OctonionAlgebra] = None,
    max_vars: int = MAX_SCAN_VARS,
) -> Iterator[BasicEvaluation]:
    """All 8^n basis-tuple evaluations in lexicographic order."""
    algebra = algebra or OctonionAlgebra.standard()
    if not algebra.mode.is_rational:
        raise ModeMismatch("basis-tuple scans require rational (exact) mode")
    _require_multilinear(poly)
    n = poly.num_vars
    if n > max_vars:
        raise BudgetExceeded(f"8^{n} basis tuples exceed the scan budget (max n = {max_vars})")
    for tup in itertools.product(range(8), repeat=n):
        yield evaluate_at_basis(poly, tup, algebra)


def classify_multilinear(
    poly: Polynomial,
    algebra: Optional[OctonionAlgebra] = None,
    assume_property_p: bool = True,
    full_scan: bool = False,
    threads: int = 1,
    max_vars: int = MAX_SCAN_VARS,
) -> Classification:
    """Four-way image verdict for a multilinear polynomial.

    Streams the basis-tuple scan, keeping the lexicographically first
    nonzero scalar and nonzero pure witnesses.  Unless ``full_scan`` is set
    the scan stops (at a chunk boundary, for thread-count independence) once
    both witnesses exist, since the full image is already decided then.
    """
    algebra = algebra or OctonionAlgebra.standard()
    if not algebra.mode.is_rational:
        raise ModeMismatch("classification requires rational (exact) mode")
    _require_multilinear(poly)

    result = Classification(verdict=ZERO)
    if not algebra.is_standard:
        result.warnings.append(
            "non-standard parameters: the four-way classification is only "
            "certified for division (standard) octonions"
        )
    if poly.is_zero:
        result.warnings.append("zero polynomial: vacuously multilinear")
        return result

    n = poly.num_vars
    if n > max_vars:
        raise BudgetExceeded(f"8^{n} basis tuples exceed the scan budget (max n = {max_vars})")

    scalar_witness: Optional[BasicEvaluation] = None
    pure_witness: Optional[BasicEvaluation] = None
    scanned = 0

    tuples = itertools.product(range(8), repeat=n)
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while True:
            chunk = list(itertools.islice(tuples, SCAN_CHUNK))
            if not chunk:
                break
            if pool is not None:
                evals = list(pool.map(lambda t: evaluate_at_basis(poly, t, algebra), chunk))
            else:
                evals = [evaluate_at_basis(poly, t, algebra) for t in chunk]
            scanned += len(evals)
            for ev in evals:
                if ev.coefficient == 0:
                    continue
                if ev.basis_index == 0:
                    if scalar_witness is None:
                        scalar_witness = ev
                elif pure_witness is None:
                    pure_witness = ev
            if not full_scan and scalar_witness is not None and pure_witness is not None:
                break
    finally:
        if pool is not None:
            pool.shutdown()

    result.tuples_scanned = scanned
    if scalar_witness is None and pure_witness is None:
        result.verdict = ZERO
    elif pure_witness is None:
        result.verdict = SCALARS
        result.evidence = [scalar_witness]
    elif scalar_witness is None:
        result.verdict = PURE
        result.evidence = [pure_witness]
    else:
        result.verdict = FULL
        result.evidence = [scalar_witness, pure_witness]

    if not assume_property_p and result.verdict in (PURE, FULL):
        contained = "nonzero pure octonions" if result.verdict == PURE else "values spanning beyond the scalars"
        result.warnings.append(
            f"image contains {contained}; equality with the full verdict set is "
            "certified only for fields where norm differences of quaternion pairs "
            "are squares (e.g. the reals)"
        )
    return result


@dataclass
class ConsistencyReport:
    verdict: str
    samples_checked: int
    span_dimension: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "samples_checked": self.samples_checked,
            "span_dimension": self.span_dimension,
        }


def _sample_rng(seed: int, index: int) -> random.Random:
    return random.Random((seed & 0xFFFFFFFF) * 1_000_003 + index * 7919 + 17)


def sample_consistency(
    poly: Polynomial,
    classification: Classification,
    samples: int,
    seed: int,
    algebra: Optional[OctonionAlgebra] = None,
) -> ConsistencyReport:
    """Cross-check a verdict on random non-basis points.

    Zero/Scalars/Pure verdicts assert exact containment for every sample (a
    violation is an implementation bug, so it raises).  For Full the report
    records the dimension of the span of the observed values instead.
    """
    if samples < 1:
        raise OctimageError("samples must be >= 1")
    algebra = algebra or OctonionAlgebra.standard()
    if not algebra.mode.is_rational:
        raise ModeMismatch("consistency sampling requires rational (exact) mode")
    verdict = classification.verdict
    span = SpanTracker(8) if verdict == FULL else None
    checked = 0
    for i in range(samples):
        rng = _sample_rng(seed, i)
        if poly.num_vars == 0:
            assignment = []
            value = algebra.zero()
        else:
            assignment = [random_octonion(algebra, rng) for _ in range(poly.num_vars)]
            value = poly.evaluate(assignment)
        checked += 1
        bad = (
            (verdict == ZERO and not value.is_zero())
            or (verdict == SCALARS and not value.is_scalar())
            or (verdict == PURE and not value.is_pure())
        )
        if bad:
            point = "; ".join(algebra.format(x) for x in assignment)
            raise ConsistencyViolation(
                f"verdict {verdict} violated by sample {i}: value "
                f"{algebra.format(value)} at ({point})"
            )
        if span is not None:
            span.add(value.coords)
    return ConsistencyReport(
        verdict=verdict,
        samples_checked=checked,
        span_dimension=span.dimension if span is not None else None,
    )


def realize_target(
    poly: Polynomial,
    target: Octonion,
    seed: int = 0,
    classification: Optional[Classification] = None,
    max_attempts: int = 16,
) -> list[Octonion]:
    """Assignment realizing ``target`` (within tolerance) for a full-image
    multilinear polynomial, by the staged slot-randomization construction.

    Requires real mode with standard parameters; the polynomial's verdict
    must be Full (it is recomputed exactly when not supplied).
    """
    algebra = target.algebra
    if algebra.mode.is_rational:
        raise ModeMismatch("target realization needs real mode (it takes square roots)")
    if not algebra.is_standard:
        raise OctimageError("target realization is supported for standard parameters only")
    for c, _ in poly.terms:
        if isinstance(c, float):
            raise ModeMismatch("polynomial coefficients must be exact for classification")

    if classification is None:
        classification = classify_multilinear(poly)
    if classification.verdict != FULL:
        raise NotFullImage(f"verdict is {classification.verdict}; need Full")
    scalar_ev = next(e for e in classification.evidence if e.basis_index == 0)

    tol = algebra.mode.tolerance
    n = poly.num_vars
    if target.is_zero():
        out = [algebra.e(i) for i in scalar_ev.tuple_indices]
        out[0] = algebra.zero()
        return out

    beta0 = float(scalar_ev.coefficient)
    b, u = target.decompose()
    rng = random.Random((seed & 0xFFFFFFFF) * 2_000_033 + 29)

    for _ in range(max_attempts):
        assignment = [algebra.e(i) for i in scalar_ev.tuple_indices]
        beta = beta0
        found = None
        for slot in range(n):
            for _ in range(max_attempts):
                cand = random_octonion(algebra, rng)
                trial = list(assignment)
                trial[slot] = cand
                value = poly.evaluate(trial)
                gamma, v = value.decompose()
                if v.norm() > tol:
                    found = (slot, cand, gamma, v)
                    break
                if abs(gamma) > tol:
                    assignment[slot] = cand
                    beta = gamma
                    break
            else:
                break  # every draw degenerate; restart
            if found:
                break
        if not found:
            continue

        slot, o_hat, gamma, v = found
        o_tilde = o_hat - (gamma / beta) * assignment[slot]
        # multilinearity: replacing the slot by o_tilde isolates the pure value v
        if u.norm() <= tol:
            final = list(assignment)
            final[slot] = (b / beta) * assignment[slot]
        else:
            c, phi = orbits.map_pure(v, u, seed=rng.randrange(1 << 30))
            final = [phi.apply(x) for x in assignment]
            final[slot] = phi.apply((b / beta) * assignment[slot] + c * o_tilde)
        residual = (poly.evaluate(final) - target).norm() ** 0.5
        if residual <= 1e-8:
            return final
    raise DegenerateDraw(
        f"no realization found after {max_attempts} attempts; try another seed"
    )
