"""Field arithmetic modes.

Scalars are plain Python numbers: ``int``/``Fraction`` in rational mode
(exact, used for identity checking and classification) and ``float`` in real
mode (used wherever square roots or intermediate-value searches are needed).
A :class:`FieldMode` carries the operations whose meaning depends on the
mode -- square root, zero test, parsing, formatting, random draws -- so the
rest of the package never branches on scalar types directly.

Rational values are canonicalized: a ``Fraction`` with denominator 1 becomes
an ``int``.  Both modes have characteristic 0, so the characteristic != 2
requirement of the algebra holds by construction.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .errors import ModeMismatch, NegativeInput, NotAPerfectSquare, ScalarSyntaxError

Scalar = Union[int, Fraction, float]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)\s*(?:/\s*(\d+))?$")


def _canonical(q: Fraction) -> Scalar:
    return q.numerator if q.denominator == 1 else q


class FieldMode:
    """Either exact rationals or double-precision reals with a tolerance.

    Use the module constants :data:`RATIONAL` and :data:`REAL`, or
    :meth:`FieldMode.real` for a custom tolerance.  Instances are immutable
    and safe to share.
    """

    __slots__ = ("name", "tolerance")

    def __init__(self, name: str, tolerance: float | None):
        if name not in ("rational", "real"):
            raise ValueError(f"unknown field mode {name!r}")
        if name == "real" and not (tolerance is not None and tolerance > 0):
            raise ValueError("real mode needs a strictly positive tolerance")
        if name == "rational" and tolerance is not None:
            raise ValueError("rational mode takes no tolerance")
        self.name = name
        self.tolerance = tolerance

    @staticmethod
    def real(tolerance: float = 1e-9) -> "FieldMode":
        return FieldMode("real", tolerance)

    @property
    def is_rational(self) -> bool:
        return self.name == "rational"

    def __repr__(self):
        if self.is_rational:
            return "FieldMode('rational')"
        return f"FieldMode('real', tolerance={self.tolerance!r})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldMode)
            and self.name == other.name
            and self.tolerance == other.tolerance
        )

    def __hash__(self):
        return hash((self.name, self.tolerance))

    # -- scalar construction ------------------------------------------------

    def coerce(self, value) -> Scalar:
        """Convert ``value`` into this mode's scalar type.

        Rational mode accepts ints, Fractions and strings; floats are
        rejected because they would silently fake exactness.  Real mode
        accepts anything float() does.
        """
        if isinstance(value, str):
            return self.parse(value)
        if self.is_rational:
            if isinstance(value, bool):
                raise ScalarSyntaxError("booleans are not scalars")
            if isinstance(value, int):
                return value
            if isinstance(value, Fraction):
                return _canonical(value)
            if isinstance(value, float):
                raise ModeMismatch(
                    "float given in rational mode; pass a Fraction or use real mode"
                )
            raise ScalarSyntaxError(f"cannot use {value!r} as a rational scalar")
        return float(value)

    def parse(self, text: str) -> Scalar:
        """Parse a scalar literal: 'p/q' or integer in rational mode,
        any decimal/scientific literal in real mode.  Locale-independent."""
        text = text.strip()
        if self.is_rational:
            m = _RATIONAL_RE.match(text)
            if m:
                num = int(m.group(1))
                den = int(m.group(2)) if m.group(2) else 1
                if den == 0:
                    raise ScalarSyntaxError(f"zero denominator in {text!r}")
                return _canonical(Fraction(num, den))
            # Decimal literals are accepted and converted exactly.
            try:
                return _canonical(Fraction(text))
            except (ValueError, ZeroDivisionError):
                raise ScalarSyntaxError(f"bad rational literal {text!r}") from None
        try:
            return float(text)
        except ValueError:
            pass
        try:
            return float(Fraction(text.replace(" ", "")))
        except (ValueError, ZeroDivisionError):
            raise ScalarSyntaxError(f"bad real literal {text!r}") from None

    def format(self, value: Scalar) -> str:
        """Render a scalar in the textual form :meth:`parse` accepts."""
        if self.is_rational:
            if isinstance(value, Fraction):
                value = _canonical(value)
            return str(value)
        return repr(float(value))

    # -- mode-dependent operations -------------------------------------------

    def sqrt(self, value: Scalar) -> Scalar:
        """Nonnegative square root; exact in rational mode.

        Raises :class:`NegativeInput` for negative input and
        :class:`NotAPerfectSquare` when a rational has no rational root.
        """
        if self.is_rational:
            q = Fraction(value)
            if q < 0:
                raise NegativeInput(f"sqrt of negative scalar {self.format(value)}")
            rn = math.isqrt(q.numerator)
            rd = math.isqrt(q.denominator)
            if rn * rn != q.numerator or rd * rd != q.denominator:
                raise NotAPerfectSquare(
                    f"{self.format(value)} is not the square of a rational"
                )
            return _canonical(Fraction(rn, rd))
        v = float(value)
        if v < -self.tolerance:
            raise NegativeInput(f"sqrt of negative scalar {v!r}")
        return math.sqrt(max(v, 0.0))

    def is_zero(self, value: Scalar) -> bool:
        if self.is_rational:
            return value == 0
        return abs(value) <= self.tolerance

    def random_scalar(self, rng, max_numerator: int = 9, denominators=(1, 1, 1, 2, 3, 4)):
        """Draw a small random scalar.

        Rational mode returns p/q with p in [-max_numerator, max_numerator]
        and q from ``denominators`` (weighted toward integers to keep bulk
        identity suites fast).  Real mode returns a uniform draw in [-1, 1].
        """
        if self.is_rational:
            num = rng.randint(-max_numerator, max_numerator)
            den = denominators[rng.randrange(len(denominators))]
            return _canonical(Fraction(num, den))
        return rng.uniform(-1.0, 1.0)


RATIONAL = FieldMode("rational", None)
REAL = FieldMode.real()
