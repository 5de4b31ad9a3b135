"""
Congruence normal forms
=======================

Invertible symmetric s: find b with b s b^t = I, adjoining square roots.
Invertible skew w: find rational b with b w b^t = J.
"""
from involut import J_matrix, Matrix, ProjectiveMatrix, canonicalize_tau_g, skew_congruence_to_J, sym_congruence_to_identity

s = Matrix([[0, 1], [1, 0]])
b, ctx = sym_congruence_to_identity(s)
print("radicands:", ctx.radicands)
print(b)
print(b @ s @ b.T == Matrix.identity(2))

s = Matrix([[2, 1, 0], [1, 3, 1], [0, 1, 5]])
b, ctx = sym_congruence_to_identity(s)
print("radicands:", ctx.radicands, " residual zero:", (b @ s @ b.T - Matrix.identity(3)).is_zero())

w = Matrix([[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]])
b = skew_congruence_to_J(w)
print(b)
print(b @ w @ b.T == J_matrix(4))

# tau*g is conjugate to tau or tau*g0 depending on the symmetry of g
for g in (Matrix.diag(2, 1), Matrix([[0, 3], [-3, 0]])):
    h, canonical = canonicalize_tau_g(ProjectiveMatrix(g))
    print(canonical.value, h.T * ProjectiveMatrix(g) * h)
