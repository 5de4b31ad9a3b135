"""
Stabilizers and the kind of the involution
==========================================

A generating tuple a is fixed by tau*g exactly when g a_i g^-1 = a_i^t.
Such g is unique up to scalars and is symmetric or skew.
"""
from involut import (
    FamilySpec, Matrix, MatrixTuple, classify_involution, stabilizer_element,
    ud22_walkthrough,
)
from involut.stabilizer import algebra_dimension
from involut.matrices import sample_tuple

# a 2x2 pair: diag(1, 2) and an off-diagonal matrix
y = MatrixTuple([Matrix.diag(1, 2), Matrix([[0, 1], [2, 0]])])
res = stabilizer_element((1, 1), y)
print(res.outcome.value, res.symmetry.value, res.element)

walk = ud22_walkthrough(1, 2, 0, 1, 2, 0)
print("g y g^-1 = y^t:", walk.conjugates_to_transpose, " g symmetric:", walk.symmetric)

# the kind table for generic tuples
for n, m in [(2, 2), (2, 3), (3, 2)]:
    rep = classify_involution(FamilySpec(n, m), trials=5, seed=0)
    print(f"n={n} m={m}: {rep.verdict.value} {rep.canonical_stabilizer}")

# symmetric components: transpose fixes them
rep = classify_involution(FamilySpec(4, 2, "sym"), trials=3, seed=0)
print("sym n=4 m=2:", rep.verdict.value)

# components J w with w skew each satisfy a quadratic, so a few of them
# only reach a small subalgebra of M_4
for m in (2, 3, 4):
    print("symp n=4 m=%d: algebra dimension %d of 16" % (m, algebra_dimension(sample_tuple(4, m, "symp", seed=1))))
rep = classify_involution(FamilySpec(4, 4, "symp"), trials=3, seed=0)
print("symp n=4 m=4:", rep.verdict.value, rep.canonical_stabilizer)
