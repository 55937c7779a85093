"""Exact linear algebra over the integers and rationals.

Rank computation is fraction-free: unit pivots are eliminated with pure
integer row operations, anything else falls back to cross-multiplication
followed by gcd normalisation.  The dense routines over Fraction are used
only on the small matrices that occur when cohomology representatives are
needed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rank_sparse(rows) -> int:
    """Rank of an integer matrix given as sparse rows ({col: coeff} dicts)."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        best = None
        pivot_idx = 0
        pivot_col = 0
        for idx, row in enumerate(rows):
            for col, val in row.items():
                key = (abs(val) != 1, len(row), col)
                if best is None or key < best:
                    best = key
                    pivot_idx, pivot_col = idx, col
            if best is not None and not best[0] and best[1] <= 2:
                break
        pivot_row = rows.pop(pivot_idx)
        pval = pivot_row.pop(pivot_col)
        rank += 1
        remaining = []
        for other in rows:
            coef = other.pop(pivot_col, 0)
            if coef:
                if coef % pval == 0:
                    q = coef // pval
                    for c, v in pivot_row.items():
                        nv = other.get(c, 0) - q * v
                        if nv:
                            other[c] = nv
                        else:
                            other.pop(c, None)
                else:
                    for c in list(other):
                        other[c] *= pval
                    for c, v in pivot_row.items():
                        nv = other.get(c, 0) - coef * v
                        if nv:
                            other[c] = nv
                        else:
                            other.pop(c, None)
                    g = 0
                    for v in other.values():
                        g = gcd(g, v)
                    if g > 1:
                        for c in other:
                            other[c] //= g
            if other:
                remaining.append(other)
        rows = remaining
    return rank


def dense_from_sparse(rows, ncols) -> list[list[Fraction]]:
    out = []
    for row in rows:
        dense = [Fraction(0)] * ncols
        for c, v in row.items():
            dense[c] = Fraction(v)
        out.append(dense)
    return out


def rref(matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Fraction; returns (rows, pivot columns)."""
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def kernel_basis(matrix, ncols) -> list[list[Fraction]]:
    """Basis of the right kernel of ``matrix`` (rows over ``ncols`` columns).

    Deterministic: one basis vector per free column, in ascending column
    order, with unit entry at the free column.
    """
    if not matrix:
        basis = []
        for c in range(ncols):
            vec = [Fraction(0)] * ncols
            vec[c] = Fraction(1)
            basis.append(vec)
        return basis
    red, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for c in range(ncols):
        if c in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[c] = Fraction(1)
        for row, p in zip(red, pivots):
            vec[p] = -row[c]
        basis.append(vec)
    return basis


def solve_columns(columns, rhs) -> list[Fraction] | None:
    """A particular solution x of  sum_j x_j * columns[j] = rhs, or None."""
    nrows = len(rhs)
    ncols = len(columns)
    aug = []
    for i in range(nrows):
        aug.append([Fraction(col[i]) for col in columns] + [Fraction(rhs[i])])
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x


class RowSpan:
    """Incrementally built row space over the rationals."""

    def __init__(self):
        self.rows = []  # (pivot column, reduced vector with unit pivot)

    def _reduce(self, vec):
        vec = [Fraction(x) for x in vec]
        for p, row in self.rows:
            f = vec[p]
            if f != 0:
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec) -> bool:
        """Add a vector; returns True if it enlarged the span."""
        res = self._reduce(vec)
        p = next((i for i, x in enumerate(res) if x != 0), None)
        if p is None:
            return False
        pv = res[p]
        res = [x / pv for x in res]
        self.rows.append((p, res))
        self.rows.sort(key=lambda t: t[0])
        return True
