"""Independent brute-force oracle for image verdicts.

Everything here is hand-coded from the Fano-plane description of the
standard octonion multiplication table -- deliberately not derived from the
package's doubling recursion -- so that agreement between this oracle and
the library is a genuine cross-check of both the table and the classifier.

Octonions are plain 8-tuples of Fractions; polynomials are (coeff, word)
lists with words as nested tuples.  The verdict scan expands every word at
every one of the 8^n basis tuples through full coordinate arithmetic.
"""

from fractions import Fraction
from itertools import product

# oriented lines (a, b, c): e_a*e_b = e_c, e_b*e_c = e_a, e_c*e_a = e_b
FANO_LINES = [
    (1, 2, 3),
    (1, 4, 5),
    (2, 4, 6),
    (3, 4, 7),
    (1, 7, 6),
    (2, 5, 7),
    (3, 6, 5),
]


def _build_table():
    sign = [[0] * 8 for _ in range(8)]
    index = [[0] * 8 for _ in range(8)]
    for i in range(8):
        sign[0][i] = sign[i][0] = 1
        index[0][i] = i
        index[i][0] = i
    for i in range(1, 8):
        sign[i][i] = -1
        index[i][i] = 0
    for a, b, c in FANO_LINES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            sign[x][y] = 1
            index[x][y] = z
            sign[y][x] = -1
            index[y][x] = z
    return sign, index


SIGN, INDEX = _build_table()


def mul(x, y):
    out = [Fraction(0)] * 8
    for i in range(8):
        if x[i] == 0:
            continue
        for j in range(8):
            if y[j] == 0:
                continue
            out[INDEX[i][j]] += SIGN[i][j] * x[i] * y[j]
    return tuple(out)


def basis(i):
    coords = [Fraction(0)] * 8
    coords[i] = Fraction(1)
    return tuple(coords)


def eval_word(word, assignment):
    if isinstance(word, int):
        return assignment[word - 1]
    return mul(eval_word(word[0], assignment), eval_word(word[1], assignment))


def eval_poly(terms, assignment):
    out = [Fraction(0)] * 8
    for coeff, word in terms:
        val = eval_word(word, assignment)
        for k in range(8):
            out[k] += Fraction(coeff) * val[k]
    return tuple(out)


def verdict(terms, num_vars):
    """Full 8^n scan and four-case mapping, entirely from scratch."""
    saw_scalar = False
    saw_pure = False
    for tup in product(range(8), repeat=num_vars):
        value = eval_poly(terms, [basis(i) for i in tup])
        scalar_part = value[0]
        pure_zero = all(c == 0 for c in value[1:])
        if scalar_part != 0 and pure_zero:
            saw_scalar = True
        elif not pure_zero and scalar_part == 0:
            saw_pure = True
        elif scalar_part != 0 and not pure_zero:
            raise AssertionError("basis evaluation with mixed components")
        if saw_scalar and saw_pure:
            return "Full"
    if saw_scalar:
        return "Scalars"
    if saw_pure:
        return "Pure"
    return "Zero"
