"""Free nonassociative polynomials.

A *word* is a binary tree over variable leaves: a leaf is an int (variable
index, 1-based) and an internal node is a pair ``(left, right)``.  Words are
never rewritten by algebra identities; parenthesization is meaning.  A
:class:`Polynomial` is a canonical linear combination of words with exact
rational (or float) coefficients.

The text grammar:

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := [scalar '*'] factor ('*' factor)*
    factor := var | '(' poly ')'
    var    := 'x' integer            (indices start at 1)
    scalar := 'p/q', integer, or decimal literal

Products associate left when written without parentheses; since the ambient
algebra is nonassociative this raises :class:`ImplicitAssociationWarning`.
A parenthesized sub-polynomial with several terms is distributed over the
product exactly.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import _linalg
from .algebra import Octonion
from .errors import (
    ArityMismatch,
    NotPure,
    OctimageError,
    PolynomialSyntaxError,
    VariableIndexOutOfRange,
)
from .fields import RATIONAL, FieldMode

Word = Union[int, tuple]


class ImplicitAssociationWarning(UserWarning):
    """An unparenthesized product of three or more factors was read
    left-associatively."""


# -- words ------------------------------------------------------------------

def word_leaves(word: Word) -> list[int]:
    if isinstance(word, int):
        return [word]
    return word_leaves(word[0]) + word_leaves(word[1])


def word_degree(word: Word) -> int:
    return len(word_leaves(word))


def word_degrees(word: Word, num_vars: int) -> tuple[int, ...]:
    """Per-variable degree vector of a word."""
    counts = [0] * num_vars
    for leaf in word_leaves(word):
        counts[leaf - 1] += 1
    return tuple(counts)


def validate_word(word: Word, num_vars: Optional[int] = None) -> int:
    """Check tree shape and leaf range; returns the max variable index."""
    if isinstance(word, int):
        if word < 1:
            raise VariableIndexOutOfRange(f"variable indices start at 1, got x{word}")
        if num_vars is not None and word > num_vars:
            raise VariableIndexOutOfRange(f"x{word} exceeds num_vars={num_vars}")
        return word
    if isinstance(word, tuple) and len(word) == 2:
        return max(validate_word(word[0], num_vars), validate_word(word[1], num_vars))
    raise OctimageError(f"not a word: {word!r}")


def render_word(word: Word) -> str:
    if isinstance(word, int):
        return f"x{word}"
    return f"({render_word(word[0])}*{render_word(word[1])})"


def _word_key(word: Word):
    if isinstance(word, int):
        return (0, word)
    return (1, _word_key(word[0]), _word_key(word[1]))


def word_to_json(word: Word):
    if isinstance(word, int):
        return word
    return [word_to_json(word[0]), word_to_json(word[1])]


def word_from_json(obj) -> Word:
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return (word_from_json(obj[0]), word_from_json(obj[1]))
    raise OctimageError(f"bad word JSON: {obj!r}")


# -- degree profile ----------------------------------------------------------

@dataclass(frozen=True)
class DegreeProfile:
    """Per-term degree vectors plus the multilinearity/weighting analysis.

    ``weights``/``weighted_degree`` are present when some integer weight
    vector gives every term the same nonzero weighted degree, i.e. the
    polynomial is semihomogeneous.  The zero polynomial is vacuously
    multilinear and semihomogeneous.
    """

    per_term: tuple[tuple[int, ...], ...]
    is_multilinear: bool
    weights: Optional[tuple[int, ...]]
    weighted_degree: Optional[int]
    total_degree: int

    @property
    def is_semihomogeneous(self) -> bool:
        return self.weights is not None


def _solve_weights(vectors: Sequence[tuple[int, ...]], num_vars: int):
    """Integer weights giving all degree vectors one nonzero weighted degree,
    or None.  Exact Gaussian elimination over Q."""
    if not vectors:
        return tuple([1] * num_vars), 0
    base = vectors[0]
    totals = {sum(v) for v in vectors}
    if len(totals) == 1:
        # homogeneous: unit weights are the natural answer
        return tuple([1] * num_vars), sum(base)
    rows = [[Fraction(v[i] - base[i]) for i in range(num_vars)] for v in vectors[1:]]
    space = _linalg.nullspace(rows, num_vars)
    # the weighted degree is linear in w, so checking a basis of the
    # solution space decides whether a nonzero degree is attainable
    pick = None
    for cand in space:
        d = sum(c * b for c, b in zip(cand, base))
        if d != 0:
            pick = cand
            break
    if pick is None:
        return None
    lcm = 1
    for c in pick:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in pick]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    d = sum(c * b for c, b in zip(ints, base))
    if d < 0:
        ints = [-c for c in ints]
        d = -d
    return tuple(ints), d


# -- polynomials --------------------------------------------------------------

class Polynomial:
    """Canonical linear combination of words; immutable.

    Terms with equal words are combined and zero coefficients dropped at
    construction.  Supports +, -, scalar multiples and the distributive
    (magma) product with another polynomial.
    """

    def __init__(self, terms: Iterable[tuple], num_vars: Optional[int] = None):
        combined: dict = {}
        max_var = 0
        for coeff, word in terms:
            max_var = max(max_var, validate_word(word, num_vars))
            if word in combined:
                combined[word] = combined[word] + coeff
            else:
                combined[word] = coeff
        if num_vars is None:
            num_vars = max_var
        self.num_vars = num_vars
        self.terms = tuple(
            (coeff, word)
            for word, coeff in sorted(combined.items(), key=lambda kv: _word_key(kv[0]))
            if coeff != 0
        )
        self._profile: Optional[DegreeProfile] = None

    @classmethod
    def zero(cls, num_vars: int = 0) -> "Polynomial":
        return cls([], num_vars)

    @classmethod
    def variable(cls, index: int, num_vars: Optional[int] = None) -> "Polynomial":
        return cls([(1, index)], num_vars)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, self.terms))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(
            list(self.terms) + list(other.terms),
            max(self.num_vars, other.num_vars),
        )

    def __neg__(self):
        return Polynomial([(-c, w) for c, w in self.terms], self.num_vars)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial(
                [(c1 * c2, (w1, w2)) for c1, w1 in self.terms for c2, w2 in other.terms],
                max(self.num_vars, other.num_vars),
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, scalar) -> "Polynomial":
        return Polynomial([(scalar * c, w) for c, w in self.terms], self.num_vars)

    def __repr__(self):
        return f"Polynomial({self.render()!r})"

    # -- analysis ---------------------------------------------------------

    def degree_profile(self) -> DegreeProfile:
        if self._profile is None:
            vectors = tuple(word_degrees(w, self.num_vars) for _, w in self.terms)
            multilinear = all(all(d == 1 for d in vec) for vec in vectors)
            solved = _solve_weights(vectors, self.num_vars)
            weights, wdeg = (None, None) if solved is None else solved
            total = max((sum(vec) for vec in vectors), default=0)
            self._profile = DegreeProfile(
                per_term=vectors,
                is_multilinear=multilinear,
                weights=weights,
                weighted_degree=wdeg,
                total_degree=total,
            )
        return self._profile

    @property
    def is_multilinear(self) -> bool:
        return self.degree_profile().is_multilinear

    def max_degree_of(self, var_index: int) -> int:
        """Largest degree of x_{var_index} over all terms."""
        return max(
            (vec[var_index - 1] for vec in self.degree_profile().per_term),
            default=0,
        )

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, assignment: Sequence[Octonion], product: str = "octonion") -> Octonion:
        """Evaluate at octonions, bottom-up per word, then sum with
        coefficients.

        ``product`` selects the bilinear product for internal nodes:
        'octonion' is the algebra product, 'malcev' is ab - ba and requires
        every assigned octonion to be pure.
        """
        if len(assignment) != self.num_vars:
            raise ArityMismatch(
                f"polynomial has {self.num_vars} variables, got {len(assignment)} values"
            )
        if product not in ("octonion", "malcev"):
            raise OctimageError(f"unknown product kind {product!r}")
        if not assignment:
            raise ArityMismatch("cannot evaluate with an empty assignment")
        algebra = assignment[0].algebra
        if product == "malcev":
            for i, x in enumerate(assignment):
                if not x.is_pure():
                    raise NotPure(f"Malcev evaluation needs pure octonions; slot {i + 1} is not")
        cache: dict = {}

        def eval_word(word: Word) -> Octonion:
            if isinstance(word, int):
                return assignment[word - 1]
            got = cache.get(word)
            if got is not None:
                return got
            left = eval_word(word[0])
            right = eval_word(word[1])
            if product == "octonion":
                value = left * right
            else:
                value = left * right - right * left
            cache[word] = value
            return value

        acc = algebra.zero()
        for coeff, word in self.terms:
            acc = acc + eval_word(word) * coeff
        return acc

    # -- text & JSON --------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for coeff, word in self.terms:
            neg = coeff < 0
            mag = -coeff if neg else coeff
            body = render_word(word)
            if mag != 1:
                num = str(mag)
                body = f"{num}*{body}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "terms": [
                {"coeff": str(c), "word": word_to_json(w)} for c, w in self.terms
            ],
        }

    @classmethod
    def from_json(cls, obj: dict, mode: FieldMode = RATIONAL) -> "Polynomial":
        terms = [
            (mode.parse(str(t["coeff"])), word_from_json(t["word"]))
            for t in obj.get("terms", [])
        ]
        return cls(terms, obj.get("num_vars"))


# -- parser -------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<number>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?(?:\s*/\s*\d+)?)"
    r"|(?P<var>x\d+)"
    r"|(?P<op>[+\-*()])"
    r")"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise PolynomialSyntaxError(
                    f"unexpected character {text[pos]!r}", position=pos
                )
            break
        if m.group("number"):
            tokens.append(("number", m.group("number"), m.start()))
        elif m.group("var"):
            tokens.append(("var", m.group("var"), m.start()))
        elif m.group("op"):
            tokens.append(("op", m.group("op"), m.start()))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, mode: FieldMode):
        self.tokens = tokens
        self.pos = 0
        self.mode = mode

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self):
        tok = self.peek()
        if tok is None:
            raise PolynomialSyntaxError("unexpected end of input")
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        tok = self.advance()
        if tok[0] != "op" or tok[1] != op:
            raise PolynomialSyntaxError(f"expected {op!r}", position=tok[2])

    def parse_poly(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.advance()
            sign = 1 if tok[1] == "+" else -1
        poly = self.parse_term().scale(sign)
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                break
            self.advance()
            nxt = self.parse_term()
            poly = poly + nxt if tok[1] == "+" else poly - nxt
        return poly

    def parse_term(self) -> Polynomial:
        coeff = 1
        tok = self.peek()
        if tok and tok[0] == "number":
            self.advance()
            coeff = self.mode.parse(tok[1])
            tok2 = self.peek()
            if tok2 is None or tok2[0] != "op" or tok2[1] != "*":
                raise PolynomialSyntaxError(
                    "a scalar must be followed by '*' and a factor",
                    position=tok[2],
                )
            self.advance()
        factors = [self.parse_factor()]
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] != "*":
                break
            self.advance()
            factors.append(self.parse_factor())
        if len(factors) > 2:
            warnings.warn(
                "product of three or more factors without parentheses; "
                "reading it left-associatively",
                ImplicitAssociationWarning,
                stacklevel=4,
            )
        poly = factors[0]
        for f in factors[1:]:
            poly = poly * f
        return poly.scale(coeff)

    def parse_factor(self) -> Polynomial:
        tok = self.advance()
        if tok[0] == "var":
            index = int(tok[1][1:])
            if index < 1:
                raise VariableIndexOutOfRange("variable indices start at 1")
            return Polynomial.variable(index)
        if tok[0] == "op" and tok[1] == "(":
            inner = self.parse_poly()
            self.expect_op(")")
            return inner
        raise PolynomialSyntaxError(
            f"expected a variable or '(', got {tok[1]!r}", position=tok[2]
        )


def parse_polynomial(
    text: str, num_vars: Optional[int] = None, mode: FieldMode = RATIONAL
) -> Polynomial:
    """Parse polynomial text into canonical form.

    The zero polynomial may be written '' or '0'.  When ``num_vars`` is
    omitted it is inferred as the largest variable index present.
    """
    stripped = text.strip()
    if stripped in ("", "0"):
        return Polynomial.zero(num_vars or 0)
    parser = _Parser(_tokenize(text), mode)
    poly = parser.parse_poly()
    if parser.peek() is not None:
        tok = parser.peek()
        raise PolynomialSyntaxError(f"unexpected token {tok[1]!r}", position=tok[2])
    if num_vars is not None:
        if poly.num_vars > num_vars:
            raise VariableIndexOutOfRange(
                f"polynomial uses x{poly.num_vars} but num_vars={num_vars}"
            )
        poly = Polynomial(poly.terms, num_vars)
    return poly


# -- stock polynomials ---------------------------------------------------------

def commutator() -> Polynomial:
    """x1*x2 - x2*x1."""
    return Polynomial([(1, (1, 2)), (-1, (2, 1))], 2)


def anticommutator() -> Polynomial:
    """x1*x2 + x2*x1."""
    return Polynomial([(1, (1, 2)), (1, (2, 1))], 2)


def associator() -> Polynomial:
    """(x1*x2)*x3 - x1*(x2*x3)."""
    return Polynomial([(1, ((1, 2), 3)), (-1, (1, (2, 3)))], 3)


def scalar_image_example() -> Polynomial:
    """A multilinear degree-4 polynomial whose image is exactly the scalar
    line.

    Found by exhaustive exact search: its basis-tuple evaluations all lie on
    e0 and some are nonzero (e.g. (e1, e2, e4, e7) gives -8), and no smaller
    multilinear polynomial has this property (the n <= 3 searches find only
    identically-zero candidates).
    """
    return Polynomial(
        [
            (-2, (1, (2, (3, 4)))), (2, (1, ((2, 3), 4))), (-2, ((1, 2), (3, 4))),
            (2, (((1, 2), 3), 4)), (-2, ((1, 2), (4, 3))), (2, ((1, (2, 4)), 3)),
            (-2, (1, (3, (2, 4)))), (2, ((1, (3, 2)), 4)), (1, (1, (4, (2, 3)))),
            (-1, (1, (4, (3, 2)))), (2, (2, (1, (3, 4)))), (-2, (2, ((1, 3), 4))),
            (1, (2, (3, (1, 4)))), (-1, (2, (3, (4, 1)))), (-1, (3, (2, (1, 4)))),
            (1, (3, (2, (4, 1)))), (-1, (4, (1, (2, 3)))), (1, (4, (1, (3, 2)))),
        ],
        4,
    )


def random_binary_tree(leaves: Sequence[int], rng) -> Word:
    """Random full binary tree over the given leaf sequence."""
    items = list(leaves)
    if len(items) == 1:
        return items[0]
    cut = rng.randint(1, len(items) - 1)
    return (random_binary_tree(items[:cut], rng), random_binary_tree(items[cut:], rng))


def random_multilinear(num_vars: int, rng, max_terms: int = 3) -> Polynomial:
    """Random multilinear polynomial: each term uses every variable once."""
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        perm = list(range(1, num_vars + 1))
        rng.shuffle(perm)
        coeff = Fraction(rng.randint(1, 9) * rng.choice((-1, 1)), rng.choice((1, 1, 2, 3)))
        terms.append((coeff, random_binary_tree(perm, rng)))
    poly = Polynomial(terms, num_vars)
    if poly.is_zero:
        # coefficient collision wiped everything; fall back to one term
        poly = Polynomial([(1, random_binary_tree(list(range(1, num_vars + 1)), rng))], num_vars)
    return poly


def random_homogeneous(num_vars: int, total_degree: int, rng, max_terms: int = 3) -> Polynomial:
    """Random polynomial whose terms share one degree vector (hence
    semihomogeneous with unit weights)."""
    counts = [0] * num_vars
    for _ in range(total_degree):
        counts[rng.randrange(num_vars)] += 1
    while not any(counts):
        counts[rng.randrange(num_vars)] += 1
    leaves_base = [i + 1 for i, c in enumerate(counts) for _ in range(c)]
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        leaves = list(leaves_base)
        rng.shuffle(leaves)
        coeff = Fraction(rng.randint(1, 9) * rng.choice((-1, 1)), rng.choice((1, 1, 2)))
        terms.append((coeff, random_binary_tree(leaves, rng)))
    poly = Polynomial(terms, num_vars)
    if poly.is_zero:
        poly = Polynomial([(1, random_binary_tree(leaves_base, rng))], num_vars)
    return poly
