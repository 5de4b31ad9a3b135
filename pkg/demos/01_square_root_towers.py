"""
Exact arithmetic in towers of square roots
==========================================

Scalars live in Q(sqrt d1, ..., sqrt dk), stored as rational coefficients
on products of the adjoined roots.
"""
from involut import TowerScalar, adjoin_sqrt
from involut.scalars import EMPTY_CONTEXT, squarefree_decomposition

# 18 = 3^2 * 2, so sqrt(18) = 3 sqrt(2)
print(squarefree_decomposition(18))

ctx, r2 = adjoin_sqrt(EMPTY_CONTEXT, 2)
ctx, r3 = adjoin_sqrt(ctx, 3)
print(ctx.radicands, r2 * r2, r3 * r3)

# sqrt(6) is already there as sqrt(2) sqrt(3)
ctx6, r6 = adjoin_sqrt(ctx, 6)
print(ctx6 == ctx, r6 == r2 * r3)

# inverses rationalize one radical at a time
x = 1 + r2 + r3
print("x       =", x)
print("1/x     =", x.inverse())
print("x * 1/x =", x * x.inverse())

# a scalar from a smaller tower lifts automatically
half = TowerScalar.rational("1/2")
print(half + r2)
