"""Deterministic vanishing certificates on finite evaluation grids.

Each coordinate of a polynomial's value is itself a polynomial in the input
coordinates, of degree at most deg_k(p) in every coordinate of variable k.
Two kinds of per-variable grids are combined into a sound certificate:

* If every term uses variable k exactly once, the value is homogeneous
  linear in that variable's coordinate block, so evaluating at the block's
  basis vectors (8 of them, 7 for pure inputs) determines it entirely.
* Otherwise the coordinates of variable k range over {0..deg_k(p)}, one
  more value than the per-coordinate degree, which pins down the polynomial
  by interpolation variable by variable.

Vanishing on the full Cartesian product of these grids therefore proves the
value vanishes identically -- it is a certificate, not a sampling guess.
Evaluation is vectorized over chunks with numpy int64 when a rigorous bound
shows no overflow, else with exact object arrays.  Grids larger than the
budget raise :class:`BudgetExceeded`; certificates never silently degrade
to sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

import numpy as np

from .algebra import OctonionAlgebra
from .errors import BudgetExceeded, OctimageError
from .polynomials import Polynomial, Word

DEFAULT_GRID_BUDGET = 1 << 22
_CHUNK = 1 << 14


@dataclass(frozen=True)
class GridCertificate:
    vanishes: bool
    points_checked: int
    counterexample: Optional[tuple[tuple[int, ...], ...]]  # one coord row per variable


class _Block:
    """Grid structure for one variable: basis vectors or a coordinate box."""

    __slots__ = ("kind", "ncoords", "offset", "radix", "size")

    def __init__(self, kind: str, ncoords: int, offset: int, radix: int):
        self.kind = kind
        self.ncoords = ncoords
        self.offset = offset
        self.radix = radix
        self.size = ncoords if kind == "basis" else radix ** ncoords

    def coords_for(self, choice):
        """Decode one choice id (array or int) into 8 coordinate columns."""
        cols = [None] * 8
        if self.kind == "basis":
            for c in range(self.ncoords):
                cols[self.offset + c] = (choice == c) * 1
        else:
            stride = 1
            for c in range(self.ncoords):
                cols[self.offset + c] = (choice // stride) % self.radix
                stride *= self.radix
        return cols


def _blocks_for(poly: Polynomial, pure_inputs: bool) -> list[_Block]:
    ncoords = 7 if pure_inputs else 8
    offset = 1 if pure_inputs else 0
    per_term = poly.degree_profile().per_term
    blocks = []
    for k in range(poly.num_vars):
        degs = [vec[k] for vec in per_term]
        if degs and all(d == 1 for d in degs):
            blocks.append(_Block("basis", ncoords, offset, 1))
        else:
            blocks.append(_Block("box", ncoords, offset, max(degs, default=0) + 1))
    return blocks


def _int_coefficients(poly: Polynomial) -> list[int]:
    """Scale coefficients to integers; zero-ness is invariant under scaling."""
    lcm = 1
    for c, _ in poly.terms:
        q = Fraction(c)
        lcm = lcm * q.denominator // gcd(lcm, q.denominator)
    return [int(Fraction(c) * lcm) for c, _ in poly.terms]


def _word_bound(word: Word, var_bounds: list[int], coeff_bound: int) -> int:
    if isinstance(word, int):
        return var_bounds[word - 1]
    left = _word_bound(word[0], var_bounds, coeff_bound)
    right = _word_bound(word[1], var_bounds, coeff_bound)
    return 8 * coeff_bound * left * right


def _vec_multiply(x, y, tc, ti):
    out = [None] * 8
    for i in range(8):
        xi = x[i]
        for j in range(8):
            c = tc[i][j]
            k = ti[i][j]
            term = xi * y[j] if c == 1 else -(xi * y[j]) if c == -1 else c * xi * y[j]
            out[k] = term if out[k] is None else out[k] + term
    return out


def grid_vanishes(
    poly: Polynomial,
    algebra: OctonionAlgebra,
    component: str = "all",
    pure_inputs: bool = False,
    product: str = "octonion",
    budget: int = DEFAULT_GRID_BUDGET,
) -> GridCertificate:
    """Certify that the chosen value component vanishes for *all* inputs.

    ``component``: 'all' (the whole value), 'pure' (coordinates 1..7) or
    'scalar' (coordinate 0).  ``pure_inputs`` restricts inputs to the pure
    subspace, as the bracket-product setting needs.  A False result carries
    one integer counterexample assignment.
    """
    if component not in ("all", "pure", "scalar"):
        raise OctimageError(f"unknown component {component!r}")
    if poly.is_zero:
        return GridCertificate(True, 0, None)

    blocks = _blocks_for(poly, pure_inputs)
    total = 1
    for b in blocks:
        total *= b.size
        if total > budget:
            raise BudgetExceeded(
                f"zero certificate needs {total}+ grid points (budget {budget}); "
                "the verdict cannot be certified at this size"
            )

    tc = algebra.table_coeff
    ti = algebra.table_index
    coeff_bound = max((abs(c) for row in tc for c in row), default=1)
    exact_tables = all(isinstance(c, int) for row in tc for c in row)
    coeffs = _int_coefficients(poly)

    # rigorous magnitude bound decides whether int64 is safe
    var_bounds = [1 if b.kind == "basis" else max(b.radix - 1, 1) for b in blocks]
    value_bound = 0
    for c, (_, word) in zip(coeffs, poly.terms):
        value_bound += abs(c) * _word_bound(word, var_bounds, coeff_bound)
    use_int64 = exact_tables and value_bound < 2 ** 62
    dtype = np.int64 if use_int64 else object

    if not exact_tables:
        # non-integer doubling parameters: work over exact Fractions
        tc = tuple(tuple(Fraction(c) for c in row) for row in tc)

    strides = [1] * len(blocks)
    for i in range(len(blocks) - 2, -1, -1):
        strides[i] = strides[i + 1] * blocks[i + 1].size

    checked = 0
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        idx = np.arange(start, stop, dtype=np.int64)
        if dtype is object:
            idx = idx.astype(object)
        zero_col = np.zeros(stop - start, dtype=dtype)
        assignment = []
        for b, stride in zip(blocks, strides):
            choice = (idx // stride) % b.size
            cols = b.coords_for(choice)
            assignment.append([zero_col if c is None else c for c in cols])
        values = _evaluate_chunk(poly, coeffs, assignment, tc, ti, product, dtype, stop - start)
        if component == "all":
            cols = values
        elif component == "pure":
            cols = values[1:]
        else:
            cols = values[:1]
        bad = None
        for colvals in cols:
            nz = np.nonzero(colvals)[0]
            if len(nz):
                bad = int(nz[0])
                break
        checked = stop
        if bad is not None:
            point = start + bad
            per_var = []
            for b, stride in zip(blocks, strides):
                choice = (point // stride) % b.size
                cols = b.coords_for(choice)
                per_var.append(tuple(0 if c is None else int(c) for c in cols))
            return GridCertificate(False, checked, tuple(per_var))
    return GridCertificate(True, checked, None)


def _evaluate_chunk(poly, int_coeffs, assignment, tc, ti, product, dtype, size):
    cache: dict = {}

    def eval_word(word):
        if isinstance(word, int):
            return assignment[word - 1]
        got = cache.get(word)
        if got is not None:
            return got
        left = eval_word(word[0])
        right = eval_word(word[1])
        value = _vec_multiply(left, right, tc, ti)
        if product == "malcev":
            other = _vec_multiply(right, left, tc, ti)
            value = [a - b for a, b in zip(value, other)]
        cache[word] = value
        return value

    acc = [np.zeros(size, dtype=dtype) for _ in range(8)]
    for c, (_, word) in zip(int_coeffs, poly.terms):
        vals = eval_word(word)
        for k in range(8):
            acc[k] = acc[k] + c * vals[k]
    return acc
