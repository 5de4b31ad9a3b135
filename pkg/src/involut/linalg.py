"""Exact elimination routines.

Kernels of rational systems go through fraction-free (Bareiss) elimination on
integer rows; determinants and inverses use ordinary Gaussian elimination and
work for any exact field element type (Fractions or tower scalars).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

from .matrices import Matrix


def determinant(a: Matrix):
    rows = [list(r) for r in a.rows]
    n = a.n
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        p = rows[c][c]
        det = det * p
        inv = 1 / p
        for r in range(c + 1, n):
            f = rows[r][c]
            if f != 0:
                f = f * inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return det


def inverse(a: Matrix) -> Matrix:
    n = a.n
    rows = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a.rows)]
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [x * inv for x in rows[c]]
        for r in range(n):
            if r != c and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return Matrix([r[n:] for r in rows])


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def bareiss_echelon(rows: Sequence[Sequence]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form of a rational matrix.

    Rows are first scaled to integers.  Each elimination step computes
    ``(p * row - f * pivot_row) / prev_p``, where the division is exact.
    Returns the nonzero echelon rows and their pivot columns.
    """
    work = _integer_rows(rows)
    if not work:
        return [], []
    ncols = len(work[0])
    nrows = len(work)
    prev = 1
    r = 0
    pivots: List[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][c]
        pivot_row = work[r]
        for i in range(r + 1, nrows):
            row = work[i]
            f = row[c]
            new = row[:c]
            for j in range(c, ncols):
                q, rem = divmod(p * row[j] - f * pivot_row[j], prev)
                assert rem == 0, "Bareiss division must be exact"
                new.append(q)
            work[i] = new
        # rows above r keep their values; Bareiss only rescales rows below
        prev = p
        pivots.append(c)
        r += 1
    return work[:r], pivots


def _primitive(vec: List[Fraction]) -> List[int]:
    den = 1
    for x in vec:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints


def nullspace(rows: Sequence[Sequence], ncols: int = None) -> List[List[int]]:
    """Basis of the right kernel of a rational matrix as primitive integer vectors."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        echelon, pivots = [], []
    else:
        echelon, pivots = bareiss_echelon(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for row, pc in zip(reversed(echelon), reversed(pivots)):
            s = sum((row[j] * x[j] for j in range(pc + 1, ncols) if row[j]), Fraction(0))
            x[pc] = -s / row[pc]
        basis.append(_primitive(x))
    return basis


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(bareiss_echelon(rows)[1])


class SpanBuilder:
    """Incrementally grown basis of a subspace of Q^d, kept as integer rows.

    Each stored row is zero at the pivots of the rows stored before it, so
    reducing against the rows in insertion order is enough.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: List[List[int]] = []
        self._pivots: List[int] = []

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec: Sequence) -> List[int]:
        """Integer multiple of ``vec`` minus its component along the span's pivots."""
        (v,) = _integer_rows([vec])
        for row, pc in zip(self._rows, self._pivots):
            f = v[pc]
            if f:
                p = row[pc]
                v = [p * x - f * y for x, y in zip(v, row)]
                g = 0
                for x in v:
                    if x:
                        g = gcd(g, x)
                if g > 1:
                    v = [x // g for x in v]
        return v

    def add(self, vec: Sequence) -> bool:
        """Add ``vec``; return True if it enlarged the span."""
        v = self.reduce(vec)
        pc = next((i for i, x in enumerate(v) if x), None)
        if pc is None:
            return False
        self._rows.append(v)
        self._pivots.append(pc)
        return True

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))
