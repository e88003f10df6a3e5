"""Constructive automorphisms of the real division octonions.

Any orthonormal pure triple (u, v, w) with w also orthogonal to u*v
generates the whole algebra multiplicatively: (e0, u, v, uv, w, uw, vw,
(uv)w) is an orthonormal basis whose multiplication table does not depend
on the triple.  The linear map matching two such bases is therefore an
algebra automorphism; we build it numerically and certify multiplicativity
on all 64 basis pairs rather than trusting the construction.

``map_pure`` uses this to move any nonzero pure octonion onto any other:
y = c * phi(x) with c = sqrt(norm(y)/norm(x)), and c = 1 whenever the norms
already agree.  Everything here runs in real mode with standard parameters;
other parameter sets are refused because the transitivity argument needs
square roots of norm quotients.
"""

from __future__ import annotations

import random
from typing import Optional

import numpy as np

from .algebra import Octonion, OctonionAlgebra, random_octonion
from .errors import (
    DegenerateDraw,
    ModeMismatch,
    NotPure,
    OctimageError,
    VerificationFailed,
    ZeroInput,
)

_RETRIES = 16


class BasicTriple:
    """Orthonormal pure triple (u, v, w) with w orthogonal to u*v."""

    __slots__ = ("u", "v", "w")

    def __init__(self, u: Octonion, v: Octonion, w: Octonion):
        self.u = u
        self.v = v
        self.w = w

    def generated_basis(self) -> list[Octonion]:
        u, v, w = self.u, self.v, self.w
        uv = u * v
        return [u.algebra.e(0), u, v, uv, w, u * w, v * w, uv * w]


class Automorphism:
    """Dense 8x8 matrix action, certified multiplicative at construction."""

    __slots__ = ("matrix", "algebra", "basis_residual")

    def __init__(self, matrix: np.ndarray, algebra: OctonionAlgebra,
                 basis_residual: float):
        m = np.array(matrix, dtype=float)
        m.flags.writeable = False
        self.matrix = m
        self.algebra = algebra
        self.basis_residual = basis_residual

    def apply(self, x: Octonion) -> Octonion:
        coords = self.matrix @ np.array([float(c) for c in x.coords])
        return self.algebra.octonion(coords.tolist())

    def __call__(self, x: Octonion) -> Octonion:
        return self.apply(x)

    def to_dict(self) -> dict:
        return {
            "matrix": [[repr(v) for v in row] for row in self.matrix.tolist()],
            "basis_residual": repr(self.basis_residual),
        }


def identity_automorphism(algebra: OctonionAlgebra) -> Automorphism:
    return Automorphism(np.eye(8), algebra, 0.0)


def _require_real_standard(algebra: OctonionAlgebra) -> None:
    if algebra.mode.is_rational:
        raise ModeMismatch(
            "automorphism construction needs real mode (rational spheres have "
            "too few points for the required rotations)"
        )
    if not algebra.is_standard:
        raise OctimageError(
            "automorphism transitivity is implemented for the standard "
            "division parameters (-1, -1, -1) only"
        )


def _unit(x: Octonion) -> Octonion:
    n = x.norm()
    if n <= x.algebra.mode.tolerance:
        raise ZeroInput("cannot normalize a (near-)zero octonion")
    return (1.0 / n ** 0.5) * x


def _project_off(x: Octonion, against: list[Octonion]) -> Octonion:
    for g in against:
        x = x - (x.bilinear(g) / g.bilinear(g)) * g
    return x


def _near_basis_axis(x: Octonion) -> Optional[int]:
    tol = x.algebra.mode.tolerance
    axis = None
    for i, c in enumerate(x.coords):
        if abs(abs(c) - 1.0) <= tol:
            if axis is not None:
                return None
            axis = i
        elif abs(c) > tol:
            return None
    return axis


def complete_basic_triple(u: Octonion, seed: int = 0) -> BasicTriple:
    """Extend a nonzero pure octonion to a basic triple.

    For (multiples of) basis elements the completion is deterministic;
    otherwise random pure draws are orthogonalized and normalized, with a
    bounded retry budget against degenerate draws.
    """
    _require_real_standard(u.algebra)
    algebra = u.algebra
    if not u.is_pure():
        raise NotPure("triple completion starts from a pure octonion")
    uhat = _unit(u)

    axis = _near_basis_axis(uhat)
    if axis is not None and axis >= 1:
        j = next(k for k in range(1, 8) if k != axis)
        uv_index = algebra.table_index[axis][j]
        k = next(m for m in range(1, 8) if m not in (axis, j, uv_index))
        return BasicTriple(uhat, algebra.e(j), algebra.e(k))

    rng = random.Random((seed & 0xFFFFFFFF) * 48_271 + 11)
    tol = algebra.mode.tolerance
    for _ in range(_RETRIES):
        v = _project_off(random_octonion(algebra, rng, pure=True), [uhat])
        if v.norm() <= tol:
            continue
        vhat = _unit(v)
        uv = uhat * vhat
        for _ in range(_RETRIES):
            w = _project_off(random_octonion(algebra, rng, pure=True), [uhat, vhat, uv])
            if w.norm() > tol:
                return BasicTriple(uhat, vhat, _unit(w))
        break
    raise DegenerateDraw("could not complete a basic triple; retry with a new seed")


def automorphism_from_triples(src: BasicTriple, dst: BasicTriple) -> Automorphism:
    """The linear map taking the basis generated by ``src`` to the one
    generated by ``dst``; certified on all 64 basis pairs."""
    algebra = src.u.algebra
    _require_real_standard(algebra)
    # all eight generated elements are pure except e0, so the map is the
    # identity on scalars and acts on the 7-dimensional pure block
    s_cols = np.array(
        [[float(c) for c in x.coords[1:]] for x in src.generated_basis()[1:]]
    ).T
    d_cols = np.array(
        [[float(c) for c in x.coords[1:]] for x in dst.generated_basis()[1:]]
    ).T
    block = d_cols @ np.linalg.inv(s_cols)
    matrix = np.eye(8)
    matrix[1:, 1:] = block

    phi = Automorphism(matrix, algebra, 0.0)
    basis = algebra.basis()
    images = [phi.apply(e) for e in basis]
    residual = 0.0
    for i in range(8):
        for j in range(8):
            c, k = algebra.basis_product(i, j)
            lhs = c * images[k]
            rhs = images[i] * images[j]
            residual = max(residual, (lhs - rhs).norm() ** 0.5)
    if residual > max(algebra.mode.tolerance, 1e-9):
        raise VerificationFailed(
            f"constructed map fails multiplicativity (residual {residual:.3e}); "
            "an invalid triple slipped through"
        )
    return Automorphism(matrix, algebra, residual)


def map_pure(x: Octonion, y: Octonion, seed: int = 0) -> tuple[float, Automorphism]:
    """Scalar c and automorphism phi with y = c * phi(x); c is exactly 1
    when the norms agree within tolerance."""
    _require_real_standard(x.algebra)
    for name, val in (("x", x), ("y", y)):
        if not val.is_pure():
            raise NotPure(f"{name} must be a pure octonion")
        if val.norm() <= val.algebra.mode.tolerance:
            raise ZeroInput(f"{name} must be nonzero")
    src = complete_basic_triple(x, seed=seed * 2 + 1)
    dst = complete_basic_triple(y, seed=seed * 2 + 2)
    phi = automorphism_from_triples(src, dst)
    nx, ny = x.norm(), y.norm()
    c = 1.0 if abs(nx - ny) <= x.algebra.mode.tolerance else (ny / nx) ** 0.5
    return c, phi
