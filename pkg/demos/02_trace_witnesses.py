"""
Reversal of monomials and trace witnesses
=========================================

rho reverses every word.  When tr(p) and tr(rho p) differ at some point,
rho moves the center and so cannot be of the first kind.
"""
from involut import MatrixTuple, Matrix, parse_poly, rho, trace_eval, trace_identity_test, evaluate

e = Matrix.unit

p = parse_poly("3 X1 X2^2 - 1/2 X2 X1 + 1", 2)
print(p, " -> ", rho(p))

# three variables in M_3
pt = MatrixTuple([e(3, 1, 2), e(3, 2, 2), e(3, 2, 1)])
xyz = parse_poly("X1 X2 X3", 3)
print("tr(XYZ) =", trace_eval(xyz, pt), " tr(ZYX) =", trace_eval(rho(xyz), pt))

# two variables in M_3 need degree six
pt = MatrixTuple([e(3, 1, 2) + e(3, 2, 3), e(3, 1, 2) + e(3, 3, 1)])
q = parse_poly("X1 X2 X1^2 X2^2", 2)
print("tr(XYX^2Y^2) =", trace_eval(q, pt), " tr(Y^2X^2YX) =", trace_eval(rho(q), pt))

# random testing can only support an identity, never prove it
res = trace_identity_test(parse_poly("X1 X2", 2), parse_poly("X2 X1", 2), n=2, trials=50, seed=0)
print("tr(XY) == tr(YX) on 50 samples:", res.identity)

res = trace_identity_test(q, rho(q), n=3, seed=0)
print("found a counterexample after", res.trials, "trial(s):", res.values)

# evaluation commutes with transposition: rho(p)(a) = p(a^t)^t
a = MatrixTuple([Matrix([[1, 2], [3, 4]]), Matrix([[0, 1], [5, -1]])])
print(evaluate(rho(p), a) == evaluate(p, a.T).T)
