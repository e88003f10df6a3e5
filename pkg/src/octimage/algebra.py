"""Octonion algebra via three Cayley-Dickson doublings of the base field.

An :class:`OctonionAlgebra` is determined by three nonzero doubling
parameters (alpha1, alpha2, alpha3) and a field mode.  The standard division
octonions use (-1, -1, -1).  The 8x8 structure table e_i * e_j = c * e_k is
derived mechanically from the doubling product

    (a1, a2)(b1, b2) = (a1*b1 + alpha * conj(b2)*a2,  b2*a1 + a2*conj(b1))

applied through three levels, so every sign is reproducible.  Basis order:
e0 = 1; level one introduces e1; level two introduces e2 and e3 (the e1*e2
slot); level three introduces e4..e7 as the images of 1, e1, e2, e3 in the
second half.

Octonions are immutable coordinate vectors over that basis.  The trace is
fixed as tr(x) = (x + conj(x)) / 2 = coordinate 0 throughout; the norm is
conj(x) * x, which is diagonal over the canonical basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ModeMismatch, OctimageError, ScalarSyntaxError
from .fields import RATIONAL, FieldMode, Scalar

STANDARD_PARAMS = (-1, -1, -1)


def _simplify(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _conj_vec(v):
    return [v[0]] + [-c for c in v[1:]]


def _add_vec(u, v):
    return [a + b for a, b in zip(u, v)]


def doubling_multiply(a: Sequence, b: Sequence, alphas: Sequence) -> list:
    """Multiply two 2**k coordinate vectors by k nested doublings.

    The outermost doubling uses the last parameter in ``alphas``.  This is
    the reference implementation the structure table is derived from (and
    checked against); it is exponential in k and never used on hot paths.
    """
    if not alphas:
        return [a[0] * b[0]]
    h = len(a) // 2
    alpha = alphas[-1]
    inner = alphas[:-1]
    a1, a2 = list(a[:h]), list(a[h:])
    b1, b2 = list(b[:h]), list(b[h:])
    first = _add_vec(
        doubling_multiply(a1, b1, inner),
        [alpha * c for c in doubling_multiply(_conj_vec(b2), a2, inner)],
    )
    second = _add_vec(
        doubling_multiply(b2, a1, inner),
        doubling_multiply(a2, _conj_vec(b1), inner),
    )
    return first + second


@dataclass(frozen=True)
class Eigenvalues:
    """The two eigenvalues a +- sqrt(radicand) of an octonion.

    Stored as the exact pair (scalar_part, radicand) so rational mode never
    leaves the field; radicand is minus the norm of the pure part.
    """

    scalar_part: Scalar
    radicand: Scalar

    @property
    def pair_sum(self) -> Scalar:
        return 2 * self.scalar_part

    @property
    def pair_product(self) -> Scalar:
        return self.scalar_part * self.scalar_part - self.radicand

    def as_complex(self) -> tuple[complex, complex]:
        """Approximate the two eigenvalues as complex numbers."""
        a = float(self.scalar_part)
        r = float(self.radicand)
        if r >= 0:
            s = r ** 0.5
            return (complex(a + s, 0.0), complex(a - s, 0.0))
        s = (-r) ** 0.5
        return (complex(a, s), complex(a, -s))


class OctonionAlgebra:
    """Shared, read-only context: parameters, mode and structure table."""

    __slots__ = ("params", "mode", "table_coeff", "table_index", "norm_weights",
                 "_basis", "_zero_scalar")

    def __init__(self, params: Iterable = STANDARD_PARAMS, mode: FieldMode = RATIONAL):
        alphas = tuple(_simplify(mode.coerce(p)) for p in params)
        if len(alphas) != 3:
            raise OctimageError("exactly three doubling parameters are required")
        if any(a == 0 for a in alphas):
            raise OctimageError("doubling parameters must be nonzero")
        self.params = alphas
        self.mode = mode

        coeff = [[None] * 8 for _ in range(8)]
        index = [[0] * 8 for _ in range(8)]
        zero = 0 if mode.is_rational else 0.0
        for i in range(8):
            ei = [zero] * 8
            ei[i] = 1 if mode.is_rational else 1.0
            for j in range(8):
                ej = [zero] * 8
                ej[j] = 1 if mode.is_rational else 1.0
                prod = doubling_multiply(ei, ej, alphas)
                nz = [(k, c) for k, c in enumerate(prod) if c != 0]
                if len(nz) != 1:
                    raise OctimageError("doubling produced a non-monomial basis product")
                k, c = nz[0]
                coeff[i][j] = _simplify(c)
                index[i][j] = k
        self.table_coeff = tuple(tuple(row) for row in coeff)
        self.table_index = tuple(tuple(row) for row in index)
        # conj(e_i)*e_i = -e_i^2 for i >= 1, so the norm form is diagonal.
        weights = [1 if mode.is_rational else 1.0]
        for i in range(1, 8):
            weights.append(-coeff[i][i])
        self.norm_weights = tuple(weights)
        self._zero_scalar = zero
        self._basis = None

    @classmethod
    def standard(cls, mode: FieldMode = RATIONAL) -> "OctonionAlgebra":
        return cls(STANDARD_PARAMS, mode)

    @property
    def is_standard(self) -> bool:
        return self.params == (-1, -1, -1) or self.params == (-1.0, -1.0, -1.0)

    def __eq__(self, other):
        return (
            isinstance(other, OctonionAlgebra)
            and self.params == other.params
            and self.mode == other.mode
        )

    def __hash__(self):
        return hash((self.params, self.mode))

    def __repr__(self):
        return f"OctonionAlgebra(params={self.params!r}, mode={self.mode!r})"

    # -- element construction --------------------------------------------

    def octonion(self, coords: Iterable) -> "Octonion":
        vals = tuple(self.mode.coerce(c) for c in coords)
        if len(vals) != 8:
            raise OctimageError("an octonion needs exactly 8 coordinates")
        return Octonion(vals, self)

    def zero(self) -> "Octonion":
        return Octonion((self._zero_scalar,) * 8, self)

    def scalar(self, value) -> "Octonion":
        c = self.mode.coerce(value)
        return Octonion((c,) + (self._zero_scalar,) * 7, self)

    def e(self, i: int) -> "Octonion":
        if not 0 <= i <= 7:
            raise OctimageError(f"basis index {i} out of range 0..7")
        if self._basis is None:
            one = 1 if self.mode.is_rational else 1.0
            basis = []
            for k in range(8):
                coords = [self._zero_scalar] * 8
                coords[k] = one
                basis.append(Octonion(tuple(coords), self))
            self._basis = tuple(basis)
        return self._basis[i]

    def basis(self) -> tuple:
        return tuple(self.e(i) for i in range(8))

    def basis_product(self, i: int, j: int):
        """e_i * e_j as a (coefficient, basis index) pair."""
        return self.table_coeff[i][j], self.table_index[i][j]

    # -- text and JSON forms ----------------------------------------------

    def parse(self, text: str) -> "Octonion":
        """Parse 'b0 + b1*e1 + ... + b7*e7' with scalar literals.

        Bare basis elements ('e3', '-e2') and plain scalars are accepted.
        A coefficient must be attached with '*'; note that '1e4' lexes as a
        scalar in scientific notation, not as 1*e4.
        """
        import re

        coords = [self._zero_scalar] * 8
        s = text.strip()
        if s in ("", "0"):
            return self.zero()
        pos = 0
        sign = 1
        term_re = re.compile(
            r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?(?:\s*/\s*\d+)?)"
            r"(?:\s*\*\s*e(?P<bi>\d))?"
            r"|e(?P<bare>\d))\s*"
        )
        first = True
        while pos < len(s):
            if not first or s[pos] in "+-":
                while pos < len(s) and s[pos].isspace():
                    pos += 1
                if pos >= len(s) or s[pos] not in "+-":
                    raise ScalarSyntaxError(f"expected '+' or '-' at position {pos} of {text!r}")
                sign = 1 if s[pos] == "+" else -1
                pos += 1
            m = term_re.match(s, pos)
            if not m:
                raise ScalarSyntaxError(f"bad octonion term at position {pos} of {text!r}")
            pos = m.end()
            if m.group("bare") is not None:
                idx = int(m.group("bare"))
                value = self.mode.coerce(1)
            else:
                value = self.mode.parse(m.group("num"))
                idx = int(m.group("bi")) if m.group("bi") is not None else 0
            if idx > 7:
                raise ScalarSyntaxError(f"basis index e{idx} out of range 0..7")
            coords[idx] = coords[idx] + sign * value
            first = False
        return self.octonion(coords)

    def format(self, x: "Octonion") -> str:
        parts = []
        for i, c in enumerate(x.coords):
            if c == 0:
                continue
            neg = c < 0
            mag = self.mode.format(-c if neg else c)
            if i == 0:
                body = mag
            elif mag == "1":
                body = f"e{i}"
            else:
                body = f"{mag}*e{i}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts) if parts else "0"


class Octonion:
    """Immutable element of an :class:`OctonionAlgebra`.

    Supports +, -, unary -, * (both octonion product and scalar scaling),
    and exact structural equality.  All derived quantities (trace, norm,
    bilinear form, eigenvalues) are exact in rational mode.
    """

    __slots__ = ("coords", "algebra")

    def __init__(self, coords: tuple, algebra: OctonionAlgebra):
        self.coords = coords
        self.algebra = algebra

    def _check_companion(self, other: "Octonion") -> None:
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise ModeMismatch("operands come from different algebras or modes")

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        self._check_companion(other)
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)), self.algebra)

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        self._check_companion(other)
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)), self.algebra)

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coords), self.algebra)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            self._check_companion(other)
            return Octonion(self._mul_coords(self.coords, other.coords), self.algebra)
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def _scale(self, scalar):
        c = self.algebra.mode.coerce(scalar)
        return Octonion(tuple(c * a for a in self.coords), self.algebra)

    def _mul_coords(self, x, y):
        tc = self.algebra.table_coeff
        ti = self.algebra.table_index
        out = [self.algebra._zero_scalar] * 8
        for i in range(8):
            xi = x[i]
            if xi == 0:
                continue
            row_c = tc[i]
            row_i = ti[i]
            for j in range(8):
                yj = y[j]
                if yj == 0:
                    continue
                c = row_c[j]
                k = row_i[j]
                if c == 1:
                    out[k] = out[k] + xi * yj
                elif c == -1:
                    out[k] = out[k] - xi * yj
                else:
                    out[k] = out[k] + xi * yj * c
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, Octonion)
            and self.algebra == other.algebra
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.coords, self.algebra.params, self.algebra.mode))

    def __repr__(self):
        return f"<{self.algebra.format(self)}>"

    # -- involution, trace, norm ------------------------------------------

    def conjugate(self) -> "Octonion":
        c = self.coords
        return Octonion((c[0],) + tuple(-a for a in c[1:]), self.algebra)

    def trace(self) -> Scalar:
        """(x + conj(x)) / 2, i.e. the coordinate of e0."""
        return self.coords[0]

    def norm(self) -> Scalar:
        """conj(x) * x as a scalar; the Euclidean square-sum for standard
        parameters."""
        w = self.algebra.norm_weights
        c = self.coords
        acc = w[0] * c[0] * c[0]
        for i in range(1, 8):
            ci = c[i]
            if ci != 0:
                acc = acc + w[i] * ci * ci
        return acc

    def bilinear(self, other: "Octonion") -> Scalar:
        """The symmetric form x*conj(y) + y*conj(x), which is scalar valued;
        equals 2*norm on the diagonal."""
        self._check_companion(other)
        w = self.algebra.norm_weights
        acc = self.algebra._zero_scalar
        for wi, a, b in zip(w, self.coords, other.coords):
            if a != 0 and b != 0:
                acc = acc + 2 * wi * a * b
        return acc

    def decompose(self):
        """Split x = a*e0 + v with v pure; returns (a, v)."""
        zero = self.algebra._zero_scalar
        pure = Octonion((zero,) + self.coords[1:], self.algebra)
        return self.coords[0], pure

    def pure_part(self) -> "Octonion":
        return self.decompose()[1]

    def pure_norm(self) -> Scalar:
        """Norm of the pure part."""
        w = self.algebra.norm_weights
        c = self.coords
        acc = self.algebra._zero_scalar
        for i in range(1, 8):
            ci = c[i]
            if ci != 0:
                acc = acc + w[i] * ci * ci
        return acc

    def is_zero(self) -> bool:
        mode = self.algebra.mode
        return all(mode.is_zero(c) for c in self.coords)

    def is_pure(self) -> bool:
        return self.algebra.mode.is_zero(self.coords[0])

    def is_scalar(self) -> bool:
        mode = self.algebra.mode
        return all(mode.is_zero(c) for c in self.coords[1:])

    # -- spectral data -----------------------------------------------------

    def eigenvalues(self) -> Eigenvalues:
        """The exact eigenvalue pair a +- sqrt(-(pure norm))."""
        a = self.coords[0]
        return Eigenvalues(scalar_part=a, radicand=-self.pure_norm())

    def char_poly_residual(self) -> "Octonion":
        """x*x - 2*tr(x)*x + norm(x)*e0; identically zero for every octonion."""
        a = self.coords[0]
        return self * self - (2 * a) * self + self.algebra.scalar(self.norm())


def random_octonion(algebra: OctonionAlgebra, rng, pure: bool = False,
                    max_numerator: int = 9, denominators=(1, 1, 1, 2, 3, 4)) -> Octonion:
    """Seeded random octonion with small coordinates; pure sets coord 0 to 0."""
    mode = algebra.mode
    coords = [mode.random_scalar(rng, max_numerator, denominators) for _ in range(8)]
    if pure:
        coords[0] = algebra._zero_scalar
    return algebra.octonion(coords)
