"""Intertwiners, generation certificates and the stabilizer element of a tuple.

For a tuple ``a`` and signs ``eps`` the extended group element ``tau*g``
fixes ``a`` exactly when ``g a_i g^-1 = eps_i a_i^t`` for every ``i``.  Those
``g`` are the invertible points of a linear space, found here by exact
elimination.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .linalg import SpanBuilder, nullspace
from .matrices import (
    J_matrix,
    Matrix,
    MatrixTuple,
    ProjectiveMatrix,
    Symmetry,
    classify_projective_symmetry,
    proj_eq,
    proj_transpose,
    tau_act,
)


class NotGeneratingError(ValueError):
    """The tuple does not generate the full matrix algebra."""


def _vec(g: Matrix) -> list:
    return g.entries()


def _unvec(v: Sequence, n: int) -> Matrix:
    return Matrix([v[i * n:(i + 1) * n] for i in range(n)])


def intertwining_system(a: MatrixTuple, b: MatrixTuple) -> List[list]:
    """Rows of the (m n^2) x n^2 system g a_i - b_i g = 0 in the entries of g."""
    if a.n != b.n or a.m != b.m:
        raise ValueError("tuples must have the same shape")
    n = a.n
    rows = []
    for ai, bi in zip(a, b):
        for r in range(n):
            for s in range(n):
                row = [0] * (n * n)
                for q in range(n):
                    row[r * n + q] += ai[q, s]
                for p in range(n):
                    row[p * n + s] -= bi[r, p]
                rows.append(row)
    return rows


def intertwiner_basis(a: MatrixTuple, b: MatrixTuple) -> List[Matrix]:
    """Basis of {g : g a_i = b_i g for all i}, as primitive integer matrices."""
    n = a.n
    rows = [r for r in intertwining_system(a, b) if any(r)]
    return [_unvec(v, n) for v in nullspace(rows, n * n)]


def algebra_dimension(a: MatrixTuple) -> int:
    """Dimension of the unital subalgebra of M_n generated by the components."""
    n = a.n
    span = SpanBuilder(n * n)
    eye = Matrix.identity(n)
    span.add(_vec(eye))
    frontier = [eye]
    while frontier and len(span) < n * n:
        nxt = []
        for w in frontier:
            for ai in a:
                prod = ai @ w
                if span.add(_vec(prod)):
                    nxt.append(prod)
        frontier = nxt
    return len(span)


def generates_full_algebra(a: MatrixTuple) -> bool:
    return algebra_dimension(a) == a.n ** 2


def centralizer_is_scalar(a: MatrixTuple) -> bool:
    return len(intertwiner_basis(a, a)) == 1


class Outcome(str, enum.Enum):
    UNIQUE = "Unique"
    NONE_EXISTS = "NoneExists"
    AMBIGUOUS = "Ambiguous"


@dataclass(frozen=True)
class StabilizerResult:
    outcome: Outcome
    element: Optional[ProjectiveMatrix] = None
    symmetry: Optional[Symmetry] = None
    dimension: int = 0

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "intertwiner_dimension": self.dimension,
            "element": None if self.element is None else self.element.to_json(),
            "symmetry": None if self.symmetry is None else self.symmetry.value,
        }


def stabilizer_element(signs: Sequence[int], a: MatrixTuple, *,
                       assume_generating: bool = False) -> StabilizerResult:
    """Find g with tau_act(signs, a) = g a g^-1, if one exists.

    The tuple must generate M_n, so that any such g is unique up to scalars
    and self-transposed.  Pass ``assume_generating`` only when the caller has
    already certified that.
    """
    if not assume_generating and not generates_full_algebra(a):
        raise NotGeneratingError("tuple does not generate the full matrix algebra")
    basis = intertwiner_basis(a, tau_act(signs, a))
    if not basis:
        return StabilizerResult(Outcome.NONE_EXISTS, dimension=0)
    if len(basis) > 1 or basis[0].det() == 0:
        return StabilizerResult(Outcome.AMBIGUOUS, dimension=len(basis))
    g = ProjectiveMatrix(basis[0])
    symmetry = classify_projective_symmetry(g)
    if symmetry is Symmetry.NOT_SELF_TRANSPOSED:
        raise AssertionError("unique intertwiner must be self-transposed")
    return StabilizerResult(Outcome.UNIQUE, g, symmetry, dimension=1)


class Canonical(str, enum.Enum):
    TAU = "Tau"
    TAU_G0 = "TauG0"


def normalizer_membership(g: ProjectiveMatrix, canonical) -> bool:
    """Does g normalize {1, tau} (PGO_n) or {1, tau g0} (PGSp_n)?"""
    canonical = Canonical(canonical)
    rep = g.representative
    if canonical is Canonical.TAU:
        return (rep.T @ rep).is_scalar()
    j = J_matrix(g.n)
    return proj_eq(ProjectiveMatrix(rep.T @ j @ rep), ProjectiveMatrix(j))


def is_tau_involution(g: ProjectiveMatrix) -> bool:
    """(tau g)^2 = 1, i.e. g (g^t)^-1 is trivial in PGL_n."""
    return proj_eq(g * proj_transpose(g).inverse(), ProjectiveMatrix(Matrix.identity(g.n)))
