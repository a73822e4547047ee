"""Small exact linear algebra over the rationals.

Just enough for intertwiner spaces: row reduction with ``Fraction``
arithmetic, rank, and a right null space basis.  Rows may hold ints or
Fractions; results are Fractions.
"""

from __future__ import annotations

from fractions import Fraction


def _rref(rows, ncols):
    mat = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        p = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat, pivots


def rank(rows, ncols: int) -> int:
    return len(_rref(rows, ncols)[1])


def nullspace(rows, ncols: int):
    """Basis of {x : rows . x = 0} as tuples of Fractions."""
    mat, pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -mat[r][f]
        basis.append(tuple(vec))
    return basis
