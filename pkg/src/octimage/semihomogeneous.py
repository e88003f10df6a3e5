"""Image analysis for semihomogeneous polynomials.

Writing a value as a*e0 + v, the rational function f = norm(v) / a^2 is
constant on automorphism orbits, so its behaviour over random points decides
the image shape: f identically 0 means a scalar-valued image, identically
infinity a pure-valued image, and two distinct defined values certify (in
exact arithmetic) that f is non-constant, which makes the image Zariski
dense.  A constant finite nonzero f cannot occur for a genuine octonion
algebra; observing one is reported as the verdict Anomalous and treated as
a self-test failure by the CLI.

The two "identically" verdicts are not left to sampling: the pure-part
(resp. scalar-part) coordinates are certified to vanish by the
deterministic grid of :mod:`octimage.zerotest`.

The eigenvalue-ratio statistic lam1/lam2 + lam2/lam1 is computed as
(4*a^2 - 2*norm) / norm, which needs no square roots and is symmetric in
the two eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import zerotest
from .algebra import Octonion, OctonionAlgebra, random_octonion
from .classify import ANOMALOUS, DENSE, PURE, SCALARS, ZERO, Classification, _sample_rng
from .errors import (
    ModeMismatch,
    NotSemihomogeneous,
    OctimageError,
    ZeroEigenvalue,
)
from .polynomials import Polynomial

INF = math.inf

_MAX_REDRAWS = 8


def require_semihomogeneous(poly: Polynomial) -> None:
    """Reject polynomials without a nonzero weighted degree (the zero
    polynomial vacuously passes)."""
    if poly.is_zero:
        return
    profile = poly.degree_profile()
    if profile.weights is None or profile.weighted_degree == 0:
        raise NotSemihomogeneous(
            "no variable weights give every term one nonzero weighted degree"
        )


@dataclass(frozen=True)
class RatioSample:
    """f = norm(pure part) / a^2 at one evaluation point.

    ``ratio`` is a Fraction/float, math.inf (a = 0, pure part nonzero), or
    None for the undefined 0/0 case.
    """

    point: tuple
    scalar_part: object
    pure_norm: object
    ratio: object

    @property
    def is_defined(self) -> bool:
        return self.ratio is not None

    def ratio_str(self) -> str:
        if self.ratio is None:
            return "undefined"
        if self.ratio == INF:
            return "inf"
        return str(self.ratio)


def ratio_function(poly: Polynomial, point: Sequence[Octonion]) -> RatioSample:
    """Evaluate f at one point; exact in rational mode."""
    require_semihomogeneous(poly)
    value = poly.evaluate(point)
    mode = value.algebra.mode
    a = value.trace()
    vnorm = value.pure_norm()
    if mode.is_zero(a):
        ratio = None if mode.is_zero(vnorm) else INF
    else:
        if mode.is_rational:
            ratio = Fraction(vnorm) / (Fraction(a) * Fraction(a))
            if ratio.denominator == 1:
                ratio = ratio.numerator
        else:
            ratio = vnorm / (a * a)
    return RatioSample(tuple(point), a, vnorm, ratio)


def classify_semihomogeneous(
    poly: Polynomial,
    samples: int = 200,
    seed: int = 0,
    algebra: Optional[OctonionAlgebra] = None,
    grid_budget: int = zerotest.DEFAULT_GRID_BUDGET,
) -> Classification:
    """Zero / Scalars / Pure / Dense verdict (Anomalous = impossible case).

    Dense is certified by two exact distinct defined ratio values; Scalars
    and Pure are certified by vanishing grids on the pure-part and
    scalar-part coordinates respectively; Zero by the full vanishing grid.
    """
    algebra = algebra or OctonionAlgebra.standard()
    if not algebra.mode.is_rational:
        raise ModeMismatch("classification requires rational (exact) mode")
    require_semihomogeneous(poly)

    result = Classification(verdict=ZERO)
    if poly.is_zero:
        return result
    if not algebra.is_standard:
        result.warnings.append(
            "non-standard parameters: the four-way classification is only "
            "certified for division (standard) octonions"
        )

    found: dict = {}  # ratio value -> RatioSample
    undefined = 0
    checked = 0
    batch_seed = seed
    for redraw in range(_MAX_REDRAWS):
        batch_undefined = 0
        for i in range(samples):
            rng = _sample_rng(batch_seed, i)
            point = [random_octonion(algebra, rng) for _ in range(poly.num_vars)]
            sample = ratio_function(poly, point)
            checked += 1
            if not sample.is_defined:
                undefined += 1
                batch_undefined += 1
                continue
            if sample.ratio not in found:
                found[sample.ratio] = sample
            if len(found) >= 2:
                break
        if len(found) >= 2 or batch_undefined <= 0.9 * samples:
            break
        batch_seed = batch_seed * 31 + 1
        result.warnings.append(
            "more than 90% of a sample batch hit the undefined 0/0 locus; redrew"
        )
    result.samples_checked = checked

    def sample_dict(s: RatioSample) -> dict:
        return {
            "f": s.ratio_str(),
            "point": [[str(c) for c in x.coords] for x in s.point],
        }

    if len(found) >= 2:
        first, second = list(found.values())[:2]
        result.verdict = DENSE
        result.details = {"distinct_ratios": [sample_dict(first), sample_dict(second)]}
        return result

    if not found:
        cert = zerotest.grid_vanishes(poly, algebra, component="all", budget=grid_budget)
        if cert.vanishes:
            result.verdict = ZERO
            result.details = {"grid_points": cert.points_checked}
            return result
        extra = ratio_function(poly, [algebra.octonion(c) for c in cert.counterexample])
        found[extra.ratio] = extra

    (ratio, witness), = found.items()
    if ratio == 0:
        cert = zerotest.grid_vanishes(poly, algebra, component="pure", budget=grid_budget)
        if cert.vanishes:
            result.verdict = SCALARS
            result.details = {"grid_points": cert.points_checked}
            return result
        return _dense_from_counterexample(poly, algebra, cert, witness, result, sample_dict)
    if ratio == INF:
        cert = zerotest.grid_vanishes(poly, algebra, component="scalar", budget=grid_budget)
        if cert.vanishes:
            result.verdict = PURE
            result.details = {"grid_points": cert.points_checked}
            return result
        return _dense_from_counterexample(poly, algebra, cert, witness, result, sample_dict)

    result.verdict = ANOMALOUS
    result.details = {"constant_ratio": witness.ratio_str(), "sample": sample_dict(witness)}
    result.warnings.append(
        "the ratio function appears to be a finite nonzero constant, which is "
        "impossible for octonion algebras; this signals an implementation bug"
    )
    return result


def _dense_from_counterexample(poly, algebra, cert, witness, result, sample_dict):
    other = ratio_function(poly, [algebra.octonion(c) for c in cert.counterexample])
    if other.ratio == witness.ratio:
        # possible only for isotropic parameter sets outside the certified range
        result.verdict = DENSE
        result.warnings.append(
            "grid found a component escaping the sampled class but with an "
            "equal ratio value (isotropic parameters); verdict heuristic"
        )
        result.details = {"distinct_ratios": [sample_dict(witness)]}
        return result
    result.verdict = DENSE
    result.warnings.append("sampling missed a ratio class; the vanishing grid caught it")
    result.details = {"distinct_ratios": [sample_dict(witness), sample_dict(other)]}
    return result


def eigenvalue_ratio_stat(poly: Polynomial, point: Sequence[Octonion]):
    """lam1/lam2 + lam2/lam1 of the value at ``point``, as
    (4*a^2 - 2*norm)/norm; exact in rational mode.

    Undefined (ZeroEigenvalue) when the value's norm vanishes, since the
    eigenvalue product equals the norm.
    """
    value = poly.evaluate(point)
    mode = value.algebra.mode
    norm = value.norm()
    if mode.is_zero(norm):
        raise ZeroEigenvalue("the value has a zero eigenvalue (norm is 0)")
    a = value.trace()
    num = 4 * a * a - 2 * norm
    if mode.is_rational:
        out = Fraction(num) / Fraction(norm)
        return out.numerator if out.denominator == 1 else out
    return num / norm


@dataclass
class ExcludedRatioReport:
    samples_checked: int
    skipped_zero_norm: int
    hits: dict
    histogram: dict

    def to_dict(self) -> dict:
        return {
            "samples_checked": self.samples_checked,
            "skipped_zero_norm": self.skipped_zero_norm,
            "hits": dict(self.hits),
            "histogram": dict(self.histogram),
        }


def excluded_ratio_check(
    poly: Polynomial,
    excluded: Sequence,
    samples: int = 200,
    seed: int = 0,
    algebra: Optional[OctonionAlgebra] = None,
) -> ExcludedRatioReport:
    """Count sampled eigenvalue-ratio statistics landing on excluded values.

    ``excluded`` entries are values of lam1/lam2 + lam2/lam1 (the symmetric
    form, since the plain ratio is only defined up to inversion).  For a
    correctly built exclusion polynomial every count is zero.
    """
    algebra = algebra or OctonionAlgebra.standard()
    if not algebra.mode.is_rational:
        raise ModeMismatch("the excluded-ratio check requires rational (exact) mode")
    require_semihomogeneous(poly)
    if poly.is_zero:
        raise OctimageError("the zero polynomial has no eigenvalue statistics")
    targets = [algebra.mode.coerce(v) for v in excluded]
    hits = {str(t): 0 for t in targets}
    histogram: dict = {}
    skipped = 0
    for i in range(samples):
        rng = _sample_rng(seed, i)
        point = [random_octonion(algebra, rng) for _ in range(poly.num_vars)]
        try:
            stat = eigenvalue_ratio_stat(poly, point)
        except ZeroEigenvalue:
            skipped += 1
            continue
        key = str(stat)
        histogram[key] = histogram.get(key, 0) + 1
        for t in targets:
            if stat == t:
                hits[str(t)] += 1
    ordered = dict(sorted(histogram.items(), key=lambda kv: (Fraction(kv[0]), kv[0])))
    return ExcludedRatioReport(
        samples_checked=samples,
        skipped_zero_norm=skipped,
        hits=hits,
        histogram=ordered,
    )
