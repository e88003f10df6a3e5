import random
from fractions import Fraction

import pytest

from octimage.errors import (
    ModeMismatch,
    NegativeInput,
    NotAPerfectSquare,
    ScalarSyntaxError,
)
from octimage.fields import RATIONAL, REAL, FieldMode


class TestSqrt:
    def test_perfect_square(self):
        assert RATIONAL.sqrt(Fraction(9, 4)) == Fraction(3, 2)

    def test_zero(self):
        assert RATIONAL.sqrt(0) == 0

    def test_irrational(self):
        with pytest.raises(NotAPerfectSquare):
            RATIONAL.sqrt(2)

    def test_negative(self):
        with pytest.raises(NegativeInput):
            RATIONAL.sqrt(-4)
        with pytest.raises(NegativeInput):
            REAL.sqrt(-1.0)

    def test_square_roundtrip_exact(self):
        rng = random.Random(0)
        for _ in range(200):
            r = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            s = RATIONAL.sqrt(r * r)
            assert s * s == r * r
            assert s >= 0

    def test_square_roundtrip_real(self):
        rng = random.Random(1)
        for _ in range(200):
            x = rng.uniform(0, 100)
            s = REAL.sqrt(x)
            assert abs(s * s - x) <= 4 * REAL.tolerance * max(1.0, x)


class TestIsZero:
    def test_exact(self):
        assert RATIONAL.is_zero(Fraction(0, 1))
        assert not RATIONAL.is_zero(Fraction(1, 3))

    def test_tolerance(self):
        assert REAL.is_zero(1e-12)
        assert not REAL.is_zero(1e-6)

    def test_custom_tolerance(self):
        loose = FieldMode.real(1e-3)
        assert loose.is_zero(1e-4)


class TestParseFormat:
    @pytest.mark.parametrize("text,value", [
        ("3", 3),
        ("-7", -7),
        ("3/2", Fraction(3, 2)),
        ("-10/4", Fraction(-5, 2)),
        ("0.25", Fraction(1, 4)),
    ])
    def test_rational(self, text, value):
        assert RATIONAL.parse(text) == value

    def test_rational_roundtrip(self):
        for v in (3, Fraction(-5, 2), 0, Fraction(7, 3)):
            assert RATIONAL.parse(RATIONAL.format(v)) == v

    def test_real(self):
        assert REAL.parse("2.5e-3") == 2.5e-3
        assert REAL.parse("3/4") == 0.75

    def test_bad_literals(self):
        with pytest.raises(ScalarSyntaxError):
            RATIONAL.parse("3//2")
        with pytest.raises(ScalarSyntaxError):
            RATIONAL.parse("1/0")
        with pytest.raises(ScalarSyntaxError):
            REAL.parse("abc")

    def test_denominator_normalized(self):
        v = RATIONAL.parse("6/3")
        assert v == 2 and isinstance(v, int)


class TestModes:
    def test_float_rejected_in_rational(self):
        with pytest.raises(ModeMismatch):
            RATIONAL.coerce(0.5)

    def test_real_accepts_everything_numeric(self):
        assert REAL.coerce(Fraction(1, 2)) == 0.5
        assert REAL.coerce(3) == 3.0

    def test_tolerance_must_be_positive(self):
        with pytest.raises(ValueError):
            FieldMode.real(0.0)
        with pytest.raises(ValueError):
            FieldMode.real(-1e-9)

    def test_equality(self):
        assert FieldMode.real(1e-9) == REAL
        assert FieldMode.real(1e-6) != REAL
        assert RATIONAL != REAL


def test_field_axioms_hold_exactly():
    # associativity and distributivity over 1000 random rational triples
    rng = random.Random(42)
    for _ in range(1000):
        a, b, c = (Fraction(rng.randint(-99, 99), rng.randint(1, 30)) for _ in range(3))
        assert (a + b) + c - (a + (b + c)) == 0
        assert (a * b) * c - (a * (b * c)) == 0
        assert a * (b + c) - (a * b + a * c) == 0
