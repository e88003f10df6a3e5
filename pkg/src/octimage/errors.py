"""Exception hierarchy.

``OctimageError`` covers bad input or unattainable requests.
``MathViolation`` is reserved for conditions that contradict theorems the
library relies on: hitting one means an implementation bug (or misuse of
non-octonion algebra parameters), never a property of valid input.  The CLI
maps ``OctimageError`` to exit code 1 and ``MathViolation`` to exit code 2.
"""


class OctimageError(Exception):
    """Base class for all errors raised by this package."""


class ModeMismatch(OctimageError):
    """Operands built under different field modes or algebra parameters."""


class NegativeInput(OctimageError):
    """Square root of a negative scalar."""


class NotAPerfectSquare(OctimageError):
    """Rational-mode square root of a rational that is not a perfect square."""


class ScalarSyntaxError(OctimageError):
    """Malformed scalar literal."""


class PolynomialSyntaxError(OctimageError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class VariableIndexOutOfRange(OctimageError):
    """Variable index exceeds the declared number of variables."""


class ArityMismatch(OctimageError):
    """Assignment length does not match the polynomial's variable count."""


class NotPure(OctimageError):
    """A pure octonion was required but the scalar part is nonzero."""


class NotMultilinear(OctimageError):
    """Operation requires a multilinear polynomial."""


class NotSemihomogeneous(OctimageError):
    """Operation requires semihomogeneous input with nonzero weighted degree."""


class ZeroInput(OctimageError):
    """A nonzero octonion was required."""


class ZeroEigenvalue(OctimageError):
    """Eigenvalue-ratio statistic is undefined when the norm vanishes."""


class NotFullImage(OctimageError):
    """Target realization requires a polynomial whose image is all of O."""


class NotSurjective(OctimageError):
    """Target realization requires a nonzero image on the pure octonions."""


class DegenerateDraw(OctimageError):
    """Random draws kept landing on a degeneracy locus; retry budget spent."""


class DegenerateRay(OctimageError):
    """The norm along every sampled ray stayed bounded; retry budget spent."""


class BudgetExceeded(OctimageError):
    """An enumeration or grid certificate would exceed the configured budget."""


class MathViolation(OctimageError):
    """A guaranteed algebraic fact failed to hold.  Signals a bug."""


class Lemma3Violation(MathViolation):
    """A basic evaluation of a multilinear polynomial was not a scalar
    multiple of a single basis element."""


class ConsistencyViolation(MathViolation):
    """A sampled value escaped the set the classification verdict promised."""


class VerificationFailed(MathViolation):
    """A constructed automorphism failed its multiplicativity check."""
