"""The anticommutative algebra on pure octonions.

The product vw = v*w - w*v of two pure octonions is again pure (vw + wv is
scalar), is anticommutative, and satisfies the defining identity

    (xy)(xz) = ((xy)z)x + ((yz)x)x + ((zx)x)y.

For an arbitrary polynomial evaluated with this product the image on the
pure subspace is all-or-nothing: either identically zero or every pure
octonion.  ``classify_malcev`` decides which by sampling backed by a
deterministic grid certificate (a Zero verdict is a genuine polynomial
identity, never a sampling guess); ``realize_malcev_target`` makes the
surjective case constructive with a norm bisection along a ray followed by
an automorphism rotation.
"""

from __future__ import annotations

import random
from typing import Optional

from . import orbits, zerotest
from .algebra import Octonion, OctonionAlgebra, random_octonion
from .classify import PURE, ZERO, Classification, _sample_rng
from .errors import (
    DegenerateRay,
    ModeMismatch,
    NotPure,
    NotSurjective,
    OctimageError,
)
from .polynomials import Polynomial

_MAX_DOUBLINGS = 60
_BISECTION_STEPS = 200


def _require_pure(*values: Octonion) -> None:
    for i, v in enumerate(values):
        if not v.is_pure():
            raise NotPure(f"argument {i + 1} must be a pure octonion")


def malcev_product(v: Octonion, w: Octonion) -> Octonion:
    """v*w - w*v for pure v, w; the result is pure again."""
    _require_pure(v, w)
    return v * w - w * v


def malcev_identity_residual(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    """(xy)(xz) - ((xy)z)x - ((yz)x)x - ((zx)x)y with the bracket product;
    identically zero on pure octonions."""
    _require_pure(x, y, z)
    m = malcev_product
    xy = m(x, y)
    lhs = m(xy, m(x, z))
    rhs = m(m(xy, z), x) + m(m(m(y, z), x), x) + m(m(m(z, x), x), y)
    return lhs - rhs


def classify_malcev(
    poly: Polynomial,
    samples: int = 200,
    seed: int = 0,
    algebra: Optional[OctonionAlgebra] = None,
    grid_budget: int = zerotest.DEFAULT_GRID_BUDGET,
) -> Classification:
    """Zero-or-Pure verdict for an arbitrary polynomial under the bracket
    product on pure octonions.

    Any nonzero sampled value settles Pure.  When every sample vanishes the
    verdict Zero is certified by the vanishing grid over all coordinates,
    and a failed certificate flips the verdict to Pure with the
    counterexample recorded.
    """
    algebra = algebra or OctonionAlgebra.standard()
    if not algebra.mode.is_rational:
        raise ModeMismatch("classification requires rational (exact) mode")
    result = Classification(verdict=ZERO)
    if poly.is_zero:
        return result

    for i in range(max(samples, 1)):
        rng = _sample_rng(seed, i)
        assignment = [random_octonion(algebra, rng, pure=True) for _ in range(poly.num_vars)]
        value = poly.evaluate(assignment, product="malcev")
        result.samples_checked = i + 1
        if not value.is_zero():
            result.verdict = PURE
            result.details = {
                "witness_point": [[str(c) for c in x.coords] for x in assignment],
                "witness_value": algebra.format(value),
                "interpretation": "nonzero pure values exist; over the reals "
                                  "the image is all of the pure octonions",
            }
            return result

    cert = zerotest.grid_vanishes(
        poly, algebra, component="all", pure_inputs=True, product="malcev",
        budget=grid_budget,
    )
    if cert.vanishes:
        result.verdict = ZERO
        result.details = {"grid_points": cert.points_checked}
        return result
    assignment = [algebra.octonion(coords) for coords in cert.counterexample]
    value = poly.evaluate(assignment, product="malcev")
    result.verdict = PURE
    result.warnings.append(
        "sampling saw only zeros but the vanishing grid found a nonzero point"
    )
    result.details = {
        "witness_point": [[str(c) for c in x.coords] for x in assignment],
        "witness_value": algebra.format(value),
    }
    return result


def realize_malcev_target(
    poly: Polynomial,
    target: Octonion,
    seed: int = 0,
    classification: Optional[Classification] = None,
    max_attempts: int = 16,
) -> list[Octonion]:
    """Pure-octonion assignment whose bracket-product value hits ``target``.

    Finds a base point with nonzero value, matches the target's norm by
    bisecting the (polynomial, hence unbounded) norm along the scaled ray
    t -> t * base, then rotates the value onto the target with a
    norm-preserving automorphism.  Real mode, standard parameters.
    """
    algebra = target.algebra
    if algebra.mode.is_rational:
        raise ModeMismatch("target realization needs real mode")
    if not algebra.is_standard:
        raise OctimageError("target realization is supported for standard parameters only")
    if not target.is_pure():
        raise NotPure("the target must be a pure octonion")
    for c, _ in poly.terms:
        if isinstance(c, float):
            raise ModeMismatch("polynomial coefficients must be exact for classification")

    if classification is None:
        classification = classify_malcev(poly, seed=seed)
    if classification.verdict != PURE:
        raise NotSurjective("the polynomial vanishes identically on pure octonions")

    tol = algebra.mode.tolerance
    if target.is_zero():
        return [algebra.zero() for _ in range(poly.num_vars)]

    rng = random.Random((seed & 0xFFFFFFFF) * 69_621 + 3)
    m_target = target.norm()
    for _ in range(max_attempts):
        base = [random_octonion(algebra, rng, pure=True) for _ in range(poly.num_vars)]
        if poly.evaluate(base, product="malcev").norm() <= tol:
            continue

        def norm_at(t: float) -> float:
            return poly.evaluate([t * x for x in base], product="malcev").norm()

        hi = 1.0
        for _ in range(_MAX_DOUBLINGS):
            if norm_at(hi) > m_target:
                break
            hi *= 2.0
        else:
            continue  # ray norm never exceeded the target: redraw
        lo = 0.0
        for _ in range(_BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if norm_at(mid) >= m_target:
                hi = mid
            else:
                lo = mid
        t = hi
        scaled = [t * x for x in base]
        value = poly.evaluate(scaled, product="malcev")
        _, phi = orbits.map_pure(value, target, seed=rng.randrange(1 << 30))
        final = [phi.apply(x) for x in scaled]
        residual = (poly.evaluate(final, product="malcev") - target).norm() ** 0.5
        if residual <= 1e-8:
            return final
    raise DegenerateRay(
        f"no realization found after {max_attempts} ray draws; try another seed"
    )
