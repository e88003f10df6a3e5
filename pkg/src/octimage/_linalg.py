"""Small exact linear algebra routines over the rationals.

Only what the package needs: row reduction for rank/span tracking and a
nullspace basis for the weighted-degree system.  Everything works on lists
of Fractions/ints and never rounds.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (reduced rows, pivot column list)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [Fraction(x, 1) / pv if not isinstance(x, float) else x / pv
                  for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: list[list]) -> int:
    return len(rref(rows)[1])


class SpanTracker:
    """Incrementally track the dimension of the span of added vectors."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: list[list] = []

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def add(self, vector) -> bool:
        """Add a vector; returns True when it enlarged the span."""
        v = list(vector)
        for row in self._rows:
            c = row[1]
            if v[row[0]] != 0:
                f = v[row[0]]
                v = [a - f * b for a, b in zip(v, c)]
        lead = next((i for i, x in enumerate(v) if x != 0), None)
        if lead is None:
            return False
        pv = v[lead]
        v = [Fraction(x) / pv for x in v]
        self._rows.append((lead, v))
        return True


def nullspace(rows: list[list], ncols: int) -> list[list]:
    """Basis of the right nullspace of the matrix, exact over Q."""
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(vec)
    return basis
