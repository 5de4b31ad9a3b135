"""Congruence normal forms: invertible symmetric -> I, invertible skew -> J."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .matrices import (
    J_matrix,
    Matrix,
    ProjectiveMatrix,
    Symmetry,
    classify_projective_symmetry,
)
from .scalars import EMPTY_CONTEXT, TowerContext, TowerScalar, adjoin_sqrt, lift_scalar
from .stabilizer import Canonical


def _rational_rows(m: Matrix) -> List[List[Fraction]]:
    if not m.is_rational():
        raise ValueError("congruence normal forms take rational input")
    return [[x.to_fraction() if isinstance(x, TowerScalar) else x for x in r] for r in m.rows]


def symmetric_diagonalize(s: Matrix) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """Rational P with P s P^t = diag(d), every d_i nonzero.

    Pivots on the first nonzero diagonal entry; if the remaining diagonal
    vanishes, adds row and column j to i for some s_ij != 0, which makes the
    new (i, i) entry 2 s_ij.
    """
    if not s.is_symmetric():
        raise ValueError("matrix is not symmetric")
    n = s.n
    a = _rational_rows(s)
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def add_multiple(dst, src, f):
        # row op on a and P, then the matching column op on a
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        p[dst] = [x + f * y for x, y in zip(p[dst], p[src])]
        for row in a:
            row[dst] += f * row[src]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(k, n)
                         if i != j and a[i][j] != 0), None)
            if pair is None:
                raise ValueError("matrix is singular")
            i, j = pair
            add_multiple(i, j, 1)
            piv = i
        if piv != k:
            swap(k, piv)
        d = a[k][k]
        for r in range(k + 1, n):
            if a[r][k] != 0:
                add_multiple(r, k, -a[r][k] / d)
    return p, [a[i][i] for i in range(n)]


def sym_congruence_to_identity(s: Matrix) -> Tuple[Matrix, TowerContext]:
    """Return ``(b, ctx)`` with ``b s b^t = I`` exactly over the tower ``ctx``."""
    p, diag = symmetric_diagonalize(s)
    ctx = EMPTY_CONTEXT
    roots = []
    for d in diag:
        ctx, root = adjoin_sqrt(ctx, d)
        roots.append(root)
    scale = [1 / lift_scalar(r, ctx) for r in roots]
    b = Matrix([[scale[i] * x if x else lift_scalar(0, ctx) for x in row]
                for i, row in enumerate(p)])
    return b, ctx


def skew_congruence_to_J(w: Matrix) -> Matrix:
    """Rational b with ``b w b^t = J`` via a symplectic Gram-Schmidt pass.

    Builds a basis e_1..e_h, f_1..f_h with w(e_i, f_j) = delta_ij and all
    other pairings zero; the rows of b are the e's followed by the f's.
    """
    if not w.is_skew():
        raise ValueError("matrix is not skew-symmetric")
    n = w.n
    if n % 2:
        raise ValueError("odd-dimensional skew matrices are singular")
    a = _rational_rows(w)

    def form(x, y):
        return sum((x[i] * a[i][j] * y[j] for i in range(n) if x[i] for j in range(n) if y[j]),
                   Fraction(0))

    remaining = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    es, fs = [], []
    while remaining:
        e = remaining.pop(0)
        idx = next((k for k, v in enumerate(remaining) if form(e, v) != 0), None)
        if idx is None:
            raise ValueError("matrix is singular")
        f = remaining.pop(idx)
        c = form(e, f)
        f = [x / c for x in f]
        new = []
        for v in remaining:
            vf, ve = form(v, f), form(v, e)
            new.append([x - vf * y + ve * z for x, y, z in zip(v, e, f)])
        remaining = new
        es.append(e)
        fs.append(f)
    return Matrix(es + fs)


def canonicalize_tau_g(g: ProjectiveMatrix) -> Tuple[ProjectiveMatrix, Canonical]:
    """Find h with h^t g h = 1 (symmetric g) or = g0 (skew g), projectively.

    Conjugating tau*g by h gives tau*(h^t g h), so tau*g is conjugate to tau
    or to tau*g0.
    """
    symmetry = classify_projective_symmetry(g)
    if symmetry is Symmetry.SYMMETRIC:
        b, _ = sym_congruence_to_identity(g.representative)
        return ProjectiveMatrix(b.T), Canonical.TAU
    if symmetry is Symmetry.SKEW:
        b = skew_congruence_to_J(g.representative)
        return ProjectiveMatrix(b.T), Canonical.TAU_G0
    raise ValueError("g is not self-transposed")


def canonical_target(canonical: Canonical, n: int) -> ProjectiveMatrix:
    if Canonical(canonical) is Canonical.TAU:
        return ProjectiveMatrix(Matrix.identity(n))
    return ProjectiveMatrix(J_matrix(n))
