"""Hard-coded trace witnesses deciding the kind of the reversal involution."""
from __future__ import annotations

from .classifier import ud22_walkthrough
from .matrices import Matrix, MatrixTuple
from .ncpoly import parse_poly, rho, trace_eval, trace_identity_test
from .scalars import format_rational


def e(n, i, j) -> Matrix:
    return Matrix.unit(n, i, j)


def tr_xyz() -> dict:
    """tr(XYZ) vs tr(ZYX) at (e12, e22, e21) in M_3: the m >= 3 obstruction."""
    n = 3
    point = MatrixTuple([e(n, 1, 2), e(n, 2, 2), e(n, 2, 1)])
    xyz = parse_poly("X1 X2 X3", 3)
    t1, t2 = trace_eval(xyz, point), trace_eval(rho(xyz), point)
    return {
        "witness": "tr-xyz",
        "point": point.to_json(),
        "tr_XYZ": format_rational(t1),
        "tr_ZYX": format_rational(t2),
        "equal": t1 == t2,
    }


def tr_xy_deg6() -> dict:
    """tr(X Y X^2 Y^2) vs tr(Y^2 X^2 Y X) at (e12 + e23, e12 + e31): the m = 2, n >= 3 case."""
    n = 3
    point = MatrixTuple([e(n, 1, 2) + e(n, 2, 3), e(n, 1, 2) + e(n, 3, 1)])
    p = parse_poly("X1 X2 X1^2 X2^2", 2)
    t1, t2 = trace_eval(p, point), trace_eval(rho(p), point)
    return {
        "witness": "tr-xy-deg6",
        "point": point.to_json(),
        "tr_XYX2Y2": format_rational(t1),
        "tr_Y2X2YX": format_rational(t2),
        "equal": t1 == t2,
    }


UD22_CENTER_GENERATORS = ("X1", "X2", "X1^2", "X2^2", "X1 X2")


def ud22_center(trials: int = 50, seed: int = 0) -> dict:
    """rho fixes the trace generators of the center of UD(2,2); plus the explicit g = diag(c, b)."""
    fixed = {}
    for k, text in enumerate(UD22_CENTER_GENERATORS):
        p = parse_poly(text, 2)
        res = trace_identity_test(p, rho(p), 2, trials=trials, seed=[seed, k])
        fixed[f"tr({text})"] = res.identity
    walk = ud22_walkthrough(1, 2, 0, 1, 2, 0)
    return {
        "witness": "ud22-center",
        "trials": trials,
        "seed": seed,
        "rho_fixes_center_generators": fixed,
        "walkthrough": {
            "params": {"lambda": "1", "mu": "2", "a": "0", "b": "1", "c": "2", "d": "0"},
            "g": walk.g.to_json(),
            "g_y_ginv_equals_yt": walk.conjugates_to_transpose,
            "g_symmetric": walk.symmetric,
            "generates_M2": walk.generating,
        },
    }


WITNESSES = {
    "tr-xyz": tr_xyz,
    "tr-xy-deg6": tr_xy_deg6,
    "ud22-center": ud22_center,
}

