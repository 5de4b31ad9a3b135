from fractions import Fraction

import pytest

from involut import (
    Canonical,
    J_matrix,
    Matrix,
    ProjectiveMatrix,
    Symmetry,
    adjoin_sqrt,
    canonicalize_tau_g,
    classify_projective_symmetry,
    g0,
    proj_eq,
    skew_congruence_to_J,
    sym_congruence_to_identity,
)
from involut.normal_form import canonical_target, symmetric_diagonalize


def random_invertible(rng, n, skew):
    while True:
        r = rng.integers(-6, 7, size=(n, n))
        mat = Matrix((r - r.T if skew else r + r.T).tolist())
        if mat.det() != 0:
            return mat


def test_identity_needs_nothing():
    b, ctx = sym_congruence_to_identity(Matrix.identity(3))
    assert b == Matrix.identity(3) and ctx.depth == 0


def test_diagonal_squares_stay_rational():
    b, ctx = sym_congruence_to_identity(Matrix.diag(4, 9))
    assert b == Matrix.diag(Fraction(1, 2), Fraction(1, 3))
    assert ctx.depth == 0


def test_hyperbolic_plane_needs_imaginary_unit():
    s = Matrix([[0, 1], [1, 0]])
    b, ctx = sym_congruence_to_identity(s)
    assert b @ s @ b.T == Matrix.identity(2)
    # both sqrt(2) and sqrt(-1) already live in the returned tower
    assert adjoin_sqrt(ctx, -1)[0] == ctx
    assert adjoin_sqrt(ctx, 2)[0] == ctx


def test_diagonalize_recovers_congruence():
    s = Matrix([[0, 1, 2], [1, 0, 3], [2, 3, 0]])
    p, d = symmetric_diagonalize(s)
    pm = Matrix(p)
    assert pm @ s @ pm.T == Matrix.diag(*d)
    assert all(x != 0 for x in d)


def test_symmetric_residuals(rng):
    for n in range(2, 7):
        for _ in range(4):
            s = random_invertible(rng, n, skew=False)
            b, ctx = sym_congruence_to_identity(s)
            assert b @ s @ b.T - Matrix.identity(n) == Matrix.zeros(n)
            assert ctx.depth <= n


def test_skew_examples():
    assert skew_congruence_to_J(J_matrix(4)) == Matrix.identity(4)
    w = Matrix([[0, 2], [-2, 0]])
    b = skew_congruence_to_J(w)
    assert b @ w @ b.T == J_matrix(2)
    assert b.is_rational()


def test_skew_residuals(rng):
    for n in (2, 4, 6):
        for _ in range(5):
            w = random_invertible(rng, n, skew=True)
            b = skew_congruence_to_J(w)
            assert b @ w @ b.T == J_matrix(n)


def test_errors():
    with pytest.raises(ValueError):
        sym_congruence_to_identity(Matrix([[1, 2], [3, 4]]))
    with pytest.raises(ValueError):
        sym_congruence_to_identity(Matrix([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        skew_congruence_to_J(Matrix([[1, 2], [2, 1]]))
    with pytest.raises(ValueError):
        skew_congruence_to_J(Matrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]))
    with pytest.raises(ValueError):
        canonicalize_tau_g(ProjectiveMatrix(Matrix([[1, 2], [3, 4]])))


def test_canonicalize_examples():
    h, can = canonicalize_tau_g(ProjectiveMatrix(Matrix.identity(3)))
    assert can is Canonical.TAU and h == ProjectiveMatrix(Matrix.identity(3))
    h, can = canonicalize_tau_g(g0(4))
    assert can is Canonical.TAU_G0 and h == ProjectiveMatrix(Matrix.identity(4))
    g = ProjectiveMatrix(Matrix.diag(2, 1))
    h, can = canonicalize_tau_g(g)
    assert can is Canonical.TAU
    assert (h.T * g * h).representative.is_scalar()


def test_canonicalize_random(rng):
    for n, skew in [(3, False), (4, False), (4, True), (6, True)]:
        g = ProjectiveMatrix(random_invertible(rng, n, skew))
        h, can = canonicalize_tau_g(g)
        assert proj_eq(h.T * g * h, canonical_target(can, n))
        assert can is (Canonical.TAU_G0 if skew else Canonical.TAU)


def test_symmetry_class_stable_under_congruence(rng):
    for _ in range(10):
        g = random_invertible(rng, 4, skew=bool(rng.integers(2)))
        cls = classify_projective_symmetry(ProjectiveMatrix(g))
        h = random_invertible(rng, 4, skew=False)
        assert classify_projective_symmetry(ProjectiveMatrix(h @ g @ h.T)) is cls
        assert cls is not Symmetry.NOT_SELF_TRANSPOSED
