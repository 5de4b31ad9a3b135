"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line."""
import subprocess
import sys
import time

import numpy as np
import pytest

from involut import (
    Canonical,
    FamilySpec,
    Matrix,
    MatrixTuple,
    ProjectiveMatrix,
    Symmetry,
    Verdict,
    classify_involution,
    g0,
    normalizer_membership,
    parse_poly,
    proj_eq,
    trace_eval,
    trace_identity_test,
    ud22_walkthrough,
)
from involut.classifier import random_walkthrough_parameters
from involut.matrices import sample_orthogonal
from involut.normal_form import canonicalize_tau_g
from involut.scalars import format_rational
from involut.selftest import CHECKS, run_selftest
from involut.stabilizer import algebra_dimension

from conftest import e

pytestmark = pytest.mark.acceptance


def test_c1_kind_table(record):
    expected = {(2, 2): Verdict.FIRST_KIND_ORTHOGONAL}
    for nm in [(2, 3), (2, 4), (3, 2), (3, 3), (4, 2)]:
        expected[nm] = Verdict.SECOND_KIND_UNITARY
    start = time.perf_counter()
    got = {}
    for (n, m), want in expected.items():
        for seed in (0, 1):
            rep = classify_involution(FamilySpec(n, m), trials=5, seed=seed)
            got[(n, m, seed)] = rep.verdict
    elapsed = time.perf_counter() - start
    bad = {k: v.value for k, v in got.items() if v is not expected[k[:2]]}
    ok = not bad and elapsed < 30
    record("C1 kind table", ok, f"{elapsed:.1f}s mismatches={bad}")
    assert ok


def _symplectic_ok(rep):
    for t in rep.trials:
        if t.symmetry is not Symmetry.SKEW:
            return False
        h, canonical = canonicalize_tau_g(t.result.element)
        if canonical is not Canonical.TAU_G0 or not proj_eq(h.T * t.result.element * h, g0(rep.spec.n)):
            return False
    return rep.verdict is Verdict.FIRST_KIND_SYMPLECTIC


def test_c2_symplectic_detection(record):
    start = time.perf_counter()
    verdicts = {}
    ok = True
    for m in (2, 3):
        rep = classify_involution(FamilySpec(4, m, "symp"), trials=5, seed=0)
        dims = sorted({algebra_dimension(t.point) for t in rep.trials})
        verdicts[f"n4m{m}"] = f"{rep.verdict.value} (algebra dim {dims} of 16)"
        ok &= _symplectic_ok(rep)
    rep = classify_involution(FamilySpec(2, 2, "symp"), trials=5, seed=0)
    verdicts["n2m2"] = rep.verdict.value
    ok &= rep.verdict is Verdict.NOT_GENERATING
    elapsed = time.perf_counter() - start
    ok &= elapsed < 30
    record("C2 symplectic detection", ok, f"{elapsed:.1f}s {verdicts}")
    assert ok


def test_c3_orthogonal_detection(record):
    start = time.perf_counter()
    ok = True
    verdicts = {}
    for n, m in [(2, 2), (3, 2), (4, 2)]:
        rep = classify_involution(FamilySpec(n, m, "sym"), trials=5, seed=0)
        verdicts[(n, m)] = rep.verdict.value
        ok &= rep.verdict is Verdict.FIRST_KIND_ORTHOGONAL
        ok &= all(t.canonical is Canonical.TAU for t in rep.trials)
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10
    record("C3 orthogonal detection", ok, f"{elapsed:.1f}s {verdicts}")
    assert ok


def test_c4_trace_witnesses(record):
    pt = MatrixTuple([e(3, 1, 2), e(3, 2, 2), e(3, 2, 1)])
    xyz = (trace_eval(parse_poly("X1 X2 X3", 3), pt), trace_eval(parse_poly("X3 X2 X1", 3), pt))
    pt2 = MatrixTuple([e(3, 1, 2) + e(3, 2, 3), e(3, 1, 2) + e(3, 3, 1)])
    deg6 = (trace_eval(parse_poly("X1 X2 X1^2 X2^2", 2), pt2),
            trace_eval(parse_poly("X2^2 X1^2 X2 X1", 2), pt2))
    comm = trace_identity_test(parse_poly("X1 X2", 2), parse_poly("X2 X1", 2), 2, trials=50, seed=0)
    ok = xyz == (1, 0) and deg6[0] != deg6[1] and comm.identity and comm.trials == 50
    record("C4 trace witnesses", ok, "tr(XYZ),tr(ZYX)=%s,%s tr(XYX2Y2),tr(Y2X2YX)=%s,%s commutator_identity=%s"
           % (*map(format_rational, xyz + deg6), comm.identity))
    assert ok


def test_c5_walkthrough(record):
    rng = np.random.default_rng(6)
    results = [ud22_walkthrough(*random_walkthrough_parameters(rng)) for _ in range(100)]
    passed = sum(r.conjugates_to_transpose and r.symmetric for r in results)
    record("C5 2x2 walkthrough", passed == 100, f"{passed}/100")
    assert passed == 100


def test_c6_property_suites(record):
    results = run_selftest(cases=100, seed=0)
    failed = {k: v for k, v in results.items() if v["passed"] != v["cases"]}
    ok = set(results) == set(CHECKS) and not failed and all(v["cases"] >= 100 for v in results.values())
    record("C6 property suites", ok, f"{len(results)} suites x 100 cases, failed={failed}")
    assert ok


def test_c7_odd_skew_is_singular(record):
    rng = np.random.default_rng(7)
    singular = rejected = 0
    for n in (3, 5):
        for _ in range(100):
            r = rng.integers(-9, 10, size=(n, n))
            w = Matrix((r - r.T).tolist())
            singular += w.det() == 0
            try:
                ProjectiveMatrix(w)
            except ValueError:
                rejected += 1
    verdicts = [classify_involution(FamilySpec(n, m, fam), trials=2, seed=s).verdict
                for n, m, fam in [(3, 2, "full"), (3, 2, "sym"), (3, 3, "sym"), (5, 2, "sym")]
                for s in (0, 1)]
    no_symp = Verdict.FIRST_KIND_SYMPLECTIC not in verdicts
    with pytest.raises(ValueError):
        FamilySpec(3, 2, "symp")
    ok = singular == rejected == 200 and no_symp
    record("C7 odd n has no symplectic", ok, f"singular={singular}/200 rejected={rejected}/200")
    assert ok


def test_c8_normalizer_membership(record):
    pairs_ok = 0
    for k in range(20):
        p = sample_orthogonal(3, seed=2 * k) * ProjectiveMatrix(Matrix.identity(3) * (k + 1))
        q = sample_orthogonal(3, seed=2 * k + 1)
        assert normalizer_membership(p, Canonical.TAU) and normalizer_membership(q, Canonical.TAU)
        pairs_ok += normalizer_membership(p * q, Canonical.TAU)
    g0_ok = normalizer_membership(g0(4), Canonical.TAU_G0)
    diag_fails = not normalizer_membership(ProjectiveMatrix(Matrix.diag(1, 2)), Canonical.TAU)
    ok = pairs_ok == 20 and g0_ok and diag_fails
    record("C8 normalizer membership", ok, f"closed={pairs_ok}/20 g0={g0_ok} diag(1,2) rejected={diag_fails}")
    assert ok


def test_c9_cli_determinism(record):
    cmd = [sys.executable, "-m", "involut", "classify", "--n", "2", "--m", "2",
           "--family", "full", "--seed", "7"]
    out1 = subprocess.run(cmd, capture_output=True, check=True).stdout
    out2 = subprocess.run(cmd, capture_output=True, check=True).stdout
    ok = out1 == out2 and b'"FirstKindOrthogonal"' in out1
    record("C9 CLI determinism", ok, f"{len(out1)} bytes identical={out1 == out2}")
    assert ok
